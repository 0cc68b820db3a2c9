#ifndef MFACT_PRESENTATION_HPP
#define MFACT_PRESENTATION_HPP

#include <optional>

#include "groebner.hpp"

namespace mfact {

// Finitely presented module: rows index generators, columns are relations.
// In R-mode the matrix is read modulo f; over S it is exact.
template <class K>
struct ModulePresentation {
    bool over_R = false;
    std::optional<Polynomial<K>> f; // present exactly in R-mode
    PolyMatrix<K> relations;

    std::size_t generators() const { return relations.rows(); }
    const RingPtr& ring() const { return relations.ring(); }
};

template <class K>
ModulePresentation<K> make_s_module(const PolyMatrix<K>& relations)
{
    return ModulePresentation<K>{false, std::nullopt, relations};
}

template <class K>
ModulePresentation<K> make_r_module(const PolyMatrix<K>& relations, const Polynomial<K>& f)
{
    require_same_ring(relations.ring(), f.ring());
    if (f.is_zero())
        fail(ErrorKind::ZeroF, "R-mode module with f = 0");
    if (!f.constant_term().is_zero())
        fail(ErrorKind::NotLocal, "R-mode module with f not vanishing at the origin");
    return ModulePresentation<K>{true, f, reduce_mod(relations, f)};
}

// Free module of the given rank, in either ring mode.
template <class K>
ModulePresentation<K> free_module(const RingPtr& ring, std::size_t rank,
                                  std::optional<Polynomial<K>> f = std::nullopt)
{
    PolyMatrix<K> rel(ring, rank, 0);
    if (f)
        return make_r_module(rel, *f);
    return make_s_module(rel);
}

// True when the presented module is zero: every generator lies in the span
// of the relations.
template <class K>
bool presents_zero_module(const ModulePresentation<K>& m)
{
    auto gb = groebner_basis(matrix_columns(m.relations), m.generators(), m.ring(),
                             m.over_R ? m.f : std::nullopt);
    for (std::size_t i = 0; i < m.generators(); ++i) {
        auto e = ModuleElement<K>::basis_vector(m.ring(), m.generators(), i,
                                                Polynomial<K>::one(m.ring()));
        if (!is_member(e, gb))
            return false;
    }
    return true;
}

} // namespace mfact

#endif
