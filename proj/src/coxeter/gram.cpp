#include "hyperarith/coxeter/gram.hpp"

#include <algorithm>

#include "hyperarith/core/parallel.hpp"

namespace hyperarith {
namespace {

Classification classify_signature(const Signature& s) {
  Classification c;
  c.signature = s;
  if (s.negative == 0) {
    c.type = s.zero == 0 ? DiagramType::Spherical : DiagramType::Euclidean;
  } else if (s.negative == 1) {
    c.type = DiagramType::Hyperbolic;
    c.n = s.positive;
  }
  return c;
}

Classification classify_plain(const CoxeterDiagram& d) {
  return classify_signature(signature(gram_matrix(d)));
}

}  // namespace

const MultiquadraticField& coxeter_entry_field() {
  static const MultiquadraticField field = MultiquadraticField::create({2, 3, 5});
  return field;
}

FieldElement cos_pi_over(int label) {
  const auto& f = coxeter_entry_field();
  const FieldPtr& k = f.field();
  switch (label) {
    case 2: return FieldElement(k, Rational(0));
    case 3: return FieldElement(k, Rational(1, 2));
    case 4: return *f.sqrt_of(2) / FieldElement(k, Rational(2));
    case 5: return (FieldElement(k, Rational(1)) + *f.sqrt_of(5)) / FieldElement(k, Rational(4));
    case 6: return *f.sqrt_of(3) / FieldElement(k, Rational(2));
    case kInfiniteLabel: return FieldElement(k, Rational(1));
    default: throw UnsupportedLabel("unsupported edge label " + std::to_string(label));
  }
}

Matrix<FieldElement> gram_matrix(const CoxeterDiagram& d) {
  const FieldPtr& k = coxeter_entry_field().field();
  Matrix<FieldElement> g(d.rank(), d.rank(), FieldElement(k, Rational(0)));
  for (std::size_t i = 0; i < d.rank(); ++i) g(i, i) = FieldElement(k, Rational(1));
  for (const auto& e : d.edges()) g(e.i, e.j) = g(e.j, e.i) = -cos_pi_over(e.label);
  return g;
}

std::string to_string(VolumeType v) {
  switch (v) {
    case VolumeType::Compact: return "Compact";
    case VolumeType::FiniteVolumeNoncompact: return "FiniteVolumeNoncompact";
    default: return "InfiniteVolume";
  }
}

std::string Classification::describe() const {
  switch (type) {
    case DiagramType::Spherical: return "Spherical";
    case DiagramType::Euclidean: return "Euclidean";
    case DiagramType::Hyperbolic: return "Hyperbolic(" + std::to_string(n) + ")";
    default: return "OtherIndefinite";
  }
}

bool is_parabolic(const CoxeterDiagram& d) {
  for (const auto& comp : d.components())
    if (classify_plain(d.induced(comp)).type != DiagramType::Euclidean) return false;
  return true;
}

Classification classify(const CoxeterDiagram& d) {
  Classification c = classify_plain(d);
  if (c.type != DiagramType::Hyperbolic || c.signature.zero != 0 || d.rank() < 2) return c;
  bool all_spherical = true, finite = true;
  for (std::size_t v = 0; v < d.rank(); ++v) {
    std::vector<std::size_t> rest;
    for (std::size_t w = 0; w < d.rank(); ++w)
      if (w != v) rest.push_back(w);
    const CoxeterDiagram link = d.induced(rest);
    if (classify_plain(link).type == DiagramType::Spherical) continue;
    all_spherical = false;
    if (!is_parabolic(link)) finite = false;
  }
  c.volume = all_spherical ? VolumeType::Compact
                           : (finite ? VolumeType::FiniteVolumeNoncompact : VolumeType::InfiniteVolume);
  return c;
}

std::vector<SpecialSubgroup> special_subgroups(const CoxeterDiagram& d, Execution exec) {
  if (d.rank() > kMaxSubgroupRank)
    throw RankTooLarge("special subgroup enumeration is limited to rank " + std::to_string(kMaxSubgroupRank));
  std::vector<std::vector<std::size_t>> subsets;
  const std::size_t full = (std::size_t{1} << d.rank()) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < d.rank(); ++i)
      if (mask >> i & 1) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<SpecialSubgroup> out(subsets.size());
  for_each_index(subsets.size(), exec, [&](std::size_t i) {
    out[i] = SpecialSubgroup{subsets[i], classify_plain(d.induced(subsets[i]))};
  });
  return out;
}

}  // namespace hyperarith
