#pragma once

// Small named monoids used throughout the tests and examples. All have the
// identity at index 0.

#include "mwb/monoid.hpp"

namespace mwb::catalog {

inline MonoidPtr trivial() { return share(Monoid::assume_valid(1, {0}, 0)); }

/// Z_n under addition.
inline MonoidPtr cyclic(std::size_t n) {
    std::vector<Elem> flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = static_cast<Elem>((i + j) % n);
    return share(Monoid::assume_valid(n, std::move(flat), 0));
}

/// {1, 0} under multiplication: 0 = identity, 1 = absorbing zero.
inline MonoidPtr semilattice2() { return share(Monoid::assume_valid(2, {0, 1, 1, 1}, 0)); }

/// {1, a, 0} with a*a = a and 0 absorbing; indices 0 = 1, 1 = a, 2 = 0.
inline MonoidPtr m3() { return share(Monoid::assume_valid(3, {0, 1, 2, 1, 1, 2, 2, 2, 2}, 0)); }

/// The split epimorphism m3 -> semilattice2 sending a to 1, with the
/// section 1 -> 1, 0 -> 0. Not a Schreier point: 0 = 1*0 = a*0.
inline std::pair<Hom, Hom> m3_point() {
    auto a = m3();
    auto b = semilattice2();
    return {Hom::make(a, b, {0, 0, 1}), Hom::make(b, a, {0, 2})};
}

/// Reduction Z_n -> Z_m for m dividing n.
inline Hom reduction(std::size_t n, std::size_t m) {
    std::vector<Elem> map(n);
    for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<Elem>(i % m);
    return Hom::make(cyclic(n), cyclic(m), std::move(map));
}

}  // namespace mwb::catalog
