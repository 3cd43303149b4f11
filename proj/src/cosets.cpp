#include "mcc/cosets.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcc {

std::string to_string(const CosetLabel& label) {
  return std::string(label.starred ? "C*_{" : "C_{") + std::to_string(label.i) + "," + std::to_string(label.j) +
         "}";
}

bool is_valid_label(const Parameters& params, const CosetLabel& label) {
  return label.i <= params.s && label.j <= params.t && !(label.starred && label.i == params.s);
}

u64 representative(const Parameters& params, const CosetLabel& label) {
  if (!is_valid_label(params, label)) throw std::out_of_range("invalid coset label " + to_string(label));
  u64 rep = params.pow_p(label.i) * params.pow_q(label.j) % params.n;
  if (label.starred) rep = mulmod(rep, params.g, params.n);
  return rep;
}

std::vector<CosetLabel> all_labels(const Parameters& params) {
  std::vector<CosetLabel> out;
  for (unsigned i = 0; i <= params.s; ++i) {
    for (unsigned j = 0; j <= params.t; ++j) {
      out.push_back({i, j, false});
      if (i < params.s) out.push_back({i, j, true});
    }
  }
  return out;
}

u64 expected_coset_size(const Parameters& params, const CosetLabel& label) {
  if (!is_valid_label(params, label)) throw std::out_of_range("invalid coset label " + to_string(label));
  if (label.i < params.s) return params.phi_p(params.s - label.i) * params.phi_q(params.t - label.j) / 2;
  return params.phi_q(params.t - label.j);
}

bool Coset::contains(u64 e) const { return std::binary_search(elements.begin(), elements.end(), e); }

namespace {

unsigned valuation(u64 e, u64 prime, unsigned cap) {
  unsigned v = 0;
  while (v < cap && e % prime == 0) {
    e /= prime;
    ++v;
  }
  return v;
}

}  // namespace

Coset multiplicative_coset(const Parameters& params, u64 gamma) {
  const u64 n = params.n;
  gamma %= n;
  Coset out;
  out.representative = gamma;
  u64 e = gamma;
  do {
    out.elements.push_back(e);
    e = mulmod(e, params.l, n);
  } while (e != gamma);
  std::sort(out.elements.begin(), out.elements.end());

  if (gamma == 0) {
    out.label = {params.s, params.t, false};
    return out;
  }
  out.label.i = valuation(gamma, params.p, params.s);
  out.label.j = valuation(gamma, params.q, params.t);
  if (out.label.i < params.s) {
    const u64 base = params.pow_p(out.label.i) * params.pow_q(out.label.j) % n;
    out.label.starred = !out.contains(base);
  }
  return out;
}

CosetSystem::CosetSystem(Parameters params) : params_(params) {
  const auto labels = all_labels(params_);
  element_index_.assign(params_.n, UINT32_MAX);
  cosets_.reserve(labels.size());
  for (const auto& label : labels) {
    Coset c = multiplicative_coset(params_, representative(params_, label));
    if (c.label != label) {
      throw std::logic_error("coset of " + std::to_string(c.representative) + " is " + to_string(c.label) +
                             ", expected " + to_string(label));
    }
    for (u64 e : c.elements) {
      if (element_index_[e] != UINT32_MAX) {
        throw std::logic_error("cosets " + to_string(label) + " and " + to_string(cosets_[element_index_[e]].label) +
                               " overlap at " + std::to_string(e));
      }
      element_index_[e] = static_cast<std::uint32_t>(cosets_.size());
    }
    cosets_.push_back(std::move(c));
  }
  for (u64 e = 0; e < params_.n; ++e) {
    if (element_index_[e] == UINT32_MAX) throw std::logic_error("element " + std::to_string(e) + " is in no coset");
  }
}

std::size_t label_index(const Parameters& params, const CosetLabel& label) {
  if (!is_valid_label(params, label)) throw std::out_of_range("invalid coset label " + to_string(label));
  const unsigned row = 2 * (params.t + 1);
  std::size_t idx = static_cast<std::size_t>(label.i) * row;
  idx += label.i < params.s ? 2 * label.j + (label.starred ? 1 : 0) : label.j;
  return idx;
}

std::size_t CosetSystem::index_of(const CosetLabel& label) const { return label_index(params_, label); }

CosetSystem enumerate_cosets(const Parameters& params) {
  CosetSystem system(params);
  const u64 expected_count = static_cast<u64>(2 * params.s + 1) * (params.t + 1);
  if (system.size() != expected_count) {
    throw std::logic_error("expected " + std::to_string(expected_count) + " cosets, found " +
                           std::to_string(system.size()));
  }
  u64 total = 0;
  for (const auto& c : system.cosets()) {
    if (c.size() != expected_coset_size(params, c.label)) {
      throw std::logic_error("coset " + to_string(c.label) + " has " + std::to_string(c.size()) +
                             " elements, expected " + std::to_string(expected_coset_size(params, c.label)));
    }
    total += c.size();
  }
  if (total != params.n) throw std::logic_error("coset sizes do not sum to n");
  return system;
}

bool additive_uses_residues(const Parameters& params, const CosetLabel& label) {
  if (params.qr_case || label.j == params.t) return !label.starred;
  const bool even = (params.t - label.j) % 2 == 0;
  return even != label.starred;
}

Coset additive_coset_form(const Parameters& params, const CosetLabel& label) {
  if (!is_valid_label(params, label)) throw std::out_of_range("invalid coset label " + to_string(label));
  const u64 n = params.n;
  Coset out;
  out.label = label;
  out.representative = representative(params, label);
  const u64 y_mod = params.pow_q(params.t - label.j);
  // Z*_1 is taken as {0} so that the j = t cosets come out as {p^i q^t x}.
  std::vector<u64> ys;
  if (y_mod == 1) ys.push_back(0);
  for (u64 y = 1; y < y_mod; ++y) {
    if (y % params.q != 0) ys.push_back(y);
  }
  const u64 y_scale = params.pow_p(params.s) * params.pow_q(label.j) % n;

  if (label.i == params.s) {
    for (u64 y : ys) out.elements.push_back(mulmod(y_scale, y, n));
  } else {
    const QRSets qr = quadratic_residue_sets(params.p, params.s - label.i);
    const auto& xs = additive_uses_residues(params, label) ? qr.residues : qr.nonresidues;
    const u64 x_scale = params.pow_p(label.i) * params.pow_q(params.t) % n;
    for (u64 x : xs) {
      for (u64 y : ys) out.elements.push_back((mulmod(x_scale, x, n) + mulmod(y_scale, y, n)) % n);
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  return out;
}

CyclotomicClasses cyclotomic_classes(const Parameters& params) {
  const u64 n = params.n;
  const u64 half_count = params.phi_n() / 4;
  const u64 g2 = mulmod(params.g, params.g, n);
  CyclotomicClasses out;
  u64 power = 1;
  for (u64 k = 0; k < half_count; ++k) {
    out.d0.push_back(power);
    out.d0.push_back(mulmod(power, params.v, n));
    power = mulmod(power, g2, n);
  }
  for (u64 e : out.d0) out.d1.push_back(mulmod(e, params.g, n));
  std::sort(out.d0.begin(), out.d0.end());
  std::sort(out.d1.begin(), out.d1.end());
  return out;
}

u64 intersection_count(const CosetSystem& system, u64 a, const CosetLabel& x, const CosetLabel& y) {
  const u64 n = system.params().n;
  const std::size_t target = system.index_of(y);
  u64 count = 0;
  for (u64 e : system.coset(x).elements) {
    if (system.index_of_element((a + e) % n) == target) ++count;
  }
  return count;
}

}  // namespace mcc
