"""Partial permutations and the stable class algebra.

A partial permutation at level n is a pair (Y, a) with Y a subset of
{0..n-1} and a an element of the wreath product on the positions of Y.
The product juxtaposes supports: (Y1, a1)(Y2, a2) = (Y1 u Y2, a1 a2).
Gamma_n acts by simultaneous conjugation and relabeling; orbits are
indexed by types rho with |Y| = ||rho|| (fixed points inside Y count as
1-cycles carrying the identity class).

The orbit-sum structure constants are independent of n and are
nonnegative integers; the forgetful map (Y, a) -> a carries orbit sums
to binomial multiples of class sums, matching the images of the
creation-operator monomials applied to the vacuum.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial

from .algebra import (
    GroupAlgebraElement,
    WreathClassFunction,
    convolve_n,
    k_class,
    to_class_function,
)
from .partitions import class_size, enumerate_types_upto
from .wreath import (
    WreathElement,
    canonical_representative,
    enumerate_class,
    type_of,
    wreath_inv,
    wreath_mul,
)


# -- support bookkeeping -----------------------------------------------


def embed_support(group, elem, source, target):
    """Extend an element on positions `source` to positions `target`
    (both sorted tuples, source a subset of target) by fixed points."""
    pos = {p: i for i, p in enumerate(target)}
    g = [group.identity] * len(target)
    sigma = list(range(len(target)))
    for i, p in enumerate(source):
        g[pos[p]] = elem.g[i]
        sigma[pos[p]] = pos[source[elem.sigma[i]]]
    return WreathElement(tuple(g), tuple(sigma))


def restrict_support(group, elem, source, target):
    """Restrict an element on positions `source` to the sub-support
    `target`; requires every point outside `target` to be fixed."""
    pos = {p: i for i, p in enumerate(source)}
    keep = [pos[p] for p in target]
    for i in range(len(source)):
        if i not in keep and (
            elem.sigma[i] != i or elem.g[i] != group.identity
        ):
            raise ValueError("element does not fix the removed points")
    g = tuple(elem.g[i] for i in keep)
    sigma = tuple(keep.index(elem.sigma[i]) for i in keep)
    return WreathElement(g, sigma)


def minimal_support(group, elem, positions):
    """The points of `positions` genuinely moved or marked by elem."""
    return frozenset(
        p
        for i, p in enumerate(positions)
        if elem.sigma[i] != i or elem.g[i] != group.identity
    )


def pp_mul(group, y1, a1, y2, a2):
    """Product of partial permutations (supports are sorted tuples)."""
    union = tuple(sorted(set(y1) | set(y2)))
    prod = wreath_mul(
        group,
        embed_support(group, a1, y1, union),
        embed_support(group, a2, y2, union),
    )
    return union, prod


def orbit_size(group, rho, n):
    """|C_rho(n)| = binom(n, ||rho||) times the class size at ||rho||."""
    k = rho.norm
    if k > n:
        return 0
    return comb(n, k) * class_size(rho, group, k)


def enumerate_orbit(group, rho, n):
    """All partial permutations of type rho at level n."""
    k = rho.norm
    for y in itertools.combinations(range(n), k):
        for a in enumerate_class(group, rho, k):
            yield y, a


# -- structure constants ------------------------------------------------


def stable_coefficient(group, rho, sigma, nu):
    """The orbit-sum structure constant: the number of factorizations
    of the canonical element of type nu into a type-rho and a type-sigma
    partial permutation with union of supports the canonical support.

    Independent of the ambient level by construction.
    """
    k = nu.norm
    if rho.norm > k or sigma.norm > k or k > rho.norm + sigma.norm:
        return 0
    y_nu = tuple(range(k))
    x_nu = canonical_representative(group, nu, k)
    count = 0
    for y1 in itertools.combinations(range(k), rho.norm):
        complement = frozenset(y_nu) - frozenset(y1)
        for a1 in enumerate_class(group, rho, rho.norm):
            a1_full = embed_support(group, a1, y1, y_nu)
            a2_full = wreath_mul(group, wreath_inv(group, a1_full), x_nu)
            mandatory = minimal_support(group, a2_full, y_nu) | complement
            extra = sigma.norm - len(mandatory)
            if extra < 0:
                continue
            base = tuple(sorted(mandatory))
            a2 = restrict_support(group, a2_full, y_nu, base)
            if type_of(group, a2).pad_to(sigma.norm) == sigma:
                count += comb(k - len(mandatory), extra)
    return count


def stable_structure_constants(group, cap):
    """All orbit-sum structure constants d[(rho, sigma)][nu] with
    ||rho||, ||sigma|| <= cap, via the direct factorization count."""
    types = enumerate_types_upto(group, cap)
    targets = enumerate_types_upto(group, 2 * cap)
    table = {}
    for rho in types:
        for sigma in types:
            row = {}
            for nu in targets:
                if not max(rho.norm, sigma.norm) <= nu.norm <= rho.norm + sigma.norm:
                    continue
                d = stable_coefficient(group, rho, sigma, nu)
                if d:
                    row[nu] = d
            table[(rho, sigma)] = row
    return table


def orbit_product_table(group, cap, n):
    """Structure constants at a concrete level n, by multiplying out the
    full orbit sums in the algebra of partial permutations and dividing
    each orbit's total mass by the orbit size (exactness checked).

    This is the level-dependent oracle: agreement across levels and with
    the factorization count is the stability statement.
    """
    types = [rho for rho in enumerate_types_upto(group, cap) if rho.norm <= n]
    orbits = {rho: list(enumerate_orbit(group, rho, n)) for rho in types}
    table = {}
    for rho in types:
        for sigma in types:
            mass = {}
            for y1, a1 in orbits[rho]:
                for y2, a2 in orbits[sigma]:
                    union, prod = pp_mul(group, y1, a1, y2, a2)
                    nu = type_of(group, prod)
                    mass[nu] = mass.get(nu, 0) + 1
            row = {}
            for nu, total in mass.items():
                size = orbit_size(group, nu, n)
                if total % size:
                    raise ArithmeticError(
                        f"orbit mass {total} not divisible by orbit size {size}"
                    )
                row[nu] = total // size
            table[(rho, sigma)] = row
    return table


def unnormalized_constant(group, rho, sigma, nu, d_tilde):
    """The structure constant in the z-tilde-normalized basis:
    d = z(rho) z(sigma) / z(nu) * d_tilde."""
    value = Fraction(d_tilde) * rho.ztilde() * sigma.ztilde() / nu.ztilde()
    return value


# -- verification -------------------------------------------------------


def check_stability(group, cap, levels):
    """Compare the level-n orbit products across the given levels and
    against the level-free factorization counts; check integrality and
    nonnegativity in both normalizations and the support filtration.

    Returns a list of failure descriptions (empty = pass).
    """
    failures = []
    stable = stable_structure_constants(group, cap)
    per_level = {n: orbit_product_table(group, cap, n) for n in levels}
    types = enumerate_types_upto(group, cap)
    for rho in types:
        for sigma in types:
            reference = stable[(rho, sigma)]
            for n in levels:
                observed = per_level[n][(rho, sigma)]
                expected = {
                    nu: d for nu, d in reference.items() if nu.norm <= n
                }
                if observed != expected:
                    failures.append(
                        f"level {n}: {rho.label()} * {sigma.label()} mismatch"
                    )
            if reference != stable[(sigma, rho)]:
                failures.append(
                    f"commutativity: {rho.label()} * {sigma.label()}"
                )
            for nu, d in reference.items():
                if not (isinstance(d, int) and d >= 0):
                    failures.append(
                        f"integrality d~: {rho.label()},{sigma.label()},{nu.label()}"
                    )
                if nu.norm > rho.norm + sigma.norm:
                    failures.append(
                        f"filtration: {rho.label()},{sigma.label()},{nu.label()}"
                    )
                d_un = unnormalized_constant(group, rho, sigma, nu, d)
                if d_un.denominator != 1 or d_un < 0:
                    failures.append(
                        f"integrality d: {rho.label()},{sigma.label()},{nu.label()}"
                    )
    return failures


def forgetful_image(group, rho, n):
    """Sum of the underlying group elements over the orbit of type rho,
    as a central class function at level n."""
    total = GroupAlgebraElement(group, n, {})
    for y, a in enumerate_orbit(group, rho, n):
        full = embed_support(group, a, y, tuple(range(n)))
        total = total + GroupAlgebraElement(group, n, {full: 1})
    return to_class_function(total)


def padded_class_multiple(group, rho, n):
    """binom(n - ||rho|| + m, m) K^{rho padded to n}, m the number of
    1-cycles of rho on the identity class."""
    m = rho.multiplicity(1, group.class_of[group.identity])
    scale = comb(n - rho.norm + m, m)
    return k_class(group, n, rho.pad_to(n)).scale(scale)


def p_rho_vector(group, rho, n):
    """The creation-monomial image z(rho)^{-1} 1_{-(n-||rho||)}
    prod 𝔭_{-r}(K^c) |0> at level n, as a class function."""
    from .fock import heis, vacuum
    from .groups import k_basis

    if rho.norm > n:
        return WreathClassFunction(group, n, {})
    vec = vacuum(group)
    for cid, lam in rho.items:
        alpha = k_basis(group, cid)
        for r in lam.parts:
            vec = heis(group, -r, alpha, vec)
    unit = k_basis(group, group.class_of[group.identity])
    for _ in range(n - rho.norm):
        vec = heis(group, -1, unit, vec)
    scale = Fraction(1, factorial(n - rho.norm)) / rho.ztilde()
    return vec.component(n).scale(scale)


def verify_forgetful(group, cap, n):
    """Check, for every type within the cap: the forgetful image of the
    orbit sum, the binomial multiple of the padded class sum, and the
    normalized creation-monomial image at level n all agree; and the
    forgetful map intertwines the two products.

    Returns a list of failure descriptions (empty = pass).
    """
    failures = []
    types = [rho for rho in enumerate_types_upto(group, cap) if rho.norm <= n]
    images = {}
    for rho in types:
        expected = padded_class_multiple(group, rho, n)
        images[rho] = expected
        if forgetful_image(group, rho, n) != expected:
            failures.append(f"forgetful image: {rho.label()}")
        if p_rho_vector(group, rho, n) != expected:
            failures.append(f"creation monomial: {rho.label()}")
    stable = stable_structure_constants(group, cap)
    for rho in types:
        for sigma in types:
            lhs = convolve_n(images[rho], images[sigma])
            rhs = WreathClassFunction(group, n, {})
            for nu, d in stable[(rho, sigma)].items():
                if nu.norm <= n:
                    rhs = rhs + padded_class_multiple(group, nu, n).scale(d)
            if lhs != rhs:
                failures.append(
                    f"homomorphism: {rho.label()} * {sigma.label()}"
                )
    return failures
