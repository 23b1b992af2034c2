// Copyright 2026 The qgt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgt/trigpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgt {

namespace {

void prune_factor_list(TrigMonomial& m) {
  std::erase_if(m, [](const TrigFactor& f) { return f.cos_pow == 0 && f.sin_pow == 0; });
}

// Merges two sorted factor lists, adding exponents for shared angles.
TrigMonomial merge_monomials(const TrigMonomial& a, const TrigMonomial& b) {
  TrigMonomial out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].angle < b[j].angle) {
      out.push_back(a[i++]);
    } else if (b[j].angle < a[i].angle) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].angle, a[i].cos_pow + b[j].cos_pow, a[i].sin_pow + b[j].sin_pow});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  prune_factor_list(out);
  return out;
}

}  // namespace

TrigPoly::TrigPoly(long v) {
  if (v != 0) terms_[{}] = Exact(v);
}

TrigPoly::TrigPoly(Exact c) {
  if (!c.is_zero()) terms_[{}] = std::move(c);
}

TrigPoly TrigPoly::cosine(const std::string& angle) {
  TrigPoly p;
  p.terms_[{{angle, 1, 0}}] = Exact(1);
  return p;
}

TrigPoly TrigPoly::sine(const std::string& angle) {
  TrigPoly p;
  p.terms_[{{angle, 0, 1}}] = Exact(1);
  return p;
}

TrigPoly TrigPoly::monomial(TrigMonomial m, Exact coeff) {
  TrigPoly p;
  if (!coeff.is_zero()) {
    prune_factor_list(m);
    std::sort(m.begin(), m.end());
    p.terms_[std::move(m)] = std::move(coeff);
  }
  return p;
}

bool TrigPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void TrigPoly::add_term(const TrigMonomial& m, const Exact& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
  TrigPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

TrigPoly TrigPoly::operator-(const TrigPoly& o) const {
  TrigPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

TrigPoly TrigPoly::operator*(const TrigPoly& o) const {
  TrigPoly raw;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      raw.add_term(merge_monomials(ma, mb), ca * cb);
    }
  }
  return raw.canonicalized();
}

TrigPoly TrigPoly::canonicalized() const {
  TrigPoly out;
  // Worklist of unreduced terms; each sin^2 strip produces two smaller terms.
  std::vector<std::pair<TrigMonomial, Exact>> work(terms_.begin(), terms_.end());
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    size_t hot = m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i].sin_pow >= 2) {
        hot = i;
        break;
      }
    }
    if (hot == m.size()) {
      out.add_term(m, c);
      continue;
    }
    // sin^k = sin^(k-2) * (1 - cos^2)
    TrigMonomial lower = m;
    lower[hot].sin_pow -= 2;
    TrigMonomial higher = lower;
    higher[hot].cos_pow += 2;
    prune_factor_list(lower);
    work.emplace_back(std::move(lower), c);
    work.emplace_back(std::move(higher), -c);
  }
  return out;
}

double TrigPoly::eval(const std::map<std::string, double>& angles) const {
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = c.to_double();
    for (const auto& f : m) {
      auto it = angles.find(f.angle);
      if (it == angles.end()) {
        throw std::invalid_argument("unassigned angle '" + f.angle + "' in evaluation");
      }
      v *= std::pow(std::cos(it->second), f.cos_pow) * std::pow(std::sin(it->second), f.sin_pow);
    }
    total += v;
  }
  return total;
}

std::set<std::string> TrigPoly::symbols() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m) out.insert(f.angle);
  }
  return out;
}

std::string TrigPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.str();
    for (const auto& f : m) {
      for (int k = 0; k < f.cos_pow; ++k) out << "*cos(" << f.angle << ")";
      for (int k = 0; k < f.sin_pow; ++k) out << "*sin(" << f.angle << ")";
    }
  }
  return out.str();
}

}  // namespace qgt
