#pragma once

#include "csa_embed/model.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace csa_embed::test {

struct Inv {
    std::string place;
    std::int64_t num;
    std::int64_t den;
    PlaceKind kind = PlaceKind::finite;
};

struct Dec {
    std::string place;
    std::vector<std::uint64_t> parts;
    PlaceKind kind = PlaceKind::finite;
};

inline CsaSpec make_csa(std::uint64_t degree, const std::vector<Inv>& invs, FieldKind field = FieldKind::number)
{
    CsaSpec csa;
    csa.field_kind = field;
    csa.degree = degree;
    for (const auto& i : invs)
        csa.invariants[i.place] = {i.kind, qz_reduce(i.num, i.den)};
    return csa;
}

inline EtaleSpec make_etale(std::uint64_t k, const std::vector<Dec>& decs, FieldKind field = FieldKind::number)
{
    EtaleSpec etale;
    etale.field_kind = field;
    etale.degree = k;
    for (const auto& d : decs)
        etale.decompositions.emplace(d.place, LocalDecomposition{d.kind, Partition(d.parts)});
    return etale;
}

inline Pair make_pair(std::uint64_t k, std::uint64_t degree, const std::vector<Inv>& invs, const std::vector<Dec>& decs)
{
    return validate_pair(make_etale(k, decs), make_csa(degree, invs));
}

/// The worked example: K of degree 8 split as (2,2,2,2) at two places where
/// A of degree 24 has local index 4.
inline Pair worked_example()
{
    return make_pair(8, 24, {{"v1", 1, 4}, {"v2", 3, 4}}, {{"v1", {2, 2, 2, 2}}, {"v2", {2, 2, 2, 2}}});
}

/// Second family with p = 2, q = 3, m = 2: k = 4, deg A = 12, d_v = 4, k_w = 2.
inline Pair family_p2_q3_m2()
{
    return make_pair(4, 12, {{"v1", 1, 4}, {"v1'", 3, 4}}, {{"v1", {2, 2}}, {"v1'", {2, 2}}});
}

inline Rat rat(std::int64_t n, std::int64_t d = 1)
{
    return Rat(Integer(n), Integer(d));
}

inline QZ qz(std::int64_t n, std::int64_t d)
{
    return qz_reduce(n, d);
}

}  // namespace csa_embed::test
