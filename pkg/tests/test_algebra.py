"""Color brackets, closures, series, center, the adjoint representation
and the bracket-power expansion, including the algebraic identities that
make the bracket a Lie color structure."""

import random
from fractions import Fraction

import pytest

from colorlie import (
    ColorAlgebra,
    Matrix,
    NotInAlgebra,
    ParentMismatch,
    Subspace,
    ad_map,
    ad_power_expand,
    ad_representation,
    bracket_closure,
    bracket_subspaces,
    center,
    color_bracket,
    compose,
    derived_series,
    eval_bicharacter,
    flatten_map,
    full_subspace,
    is_ideal,
    is_nilpotent_algebra,
    is_nilpotent_matrix,
    is_solvable,
    lower_central_series,
    make_bicharacter,
    make_group,
    make_map,
    make_space,
    nilpotent_implies_ad_nilpotent_check,
    scale_map,
)
from colorlie.graded import add_maps, identity_map
from corpus import (
    all_configs,
    random_homogeneous_map,
    random_nil_instance,
    random_space,
    torsion_free_configs,
)

G0 = make_group(0, [])
R0 = make_bicharacter(G0, [])
E0 = G0.identity()


def gl(n):
    return make_space(G0, {E0: n})


def unit_map(space, i, j):
    n = space.total_dim
    rows = [[1 if (a, b) == (i, j) else 0 for b in range(n)] for a in range(n)]
    return make_map(space, E0, {E0: rows})


def heisenberg():
    v = gl(3)
    e12, e23, e13 = unit_map(v, 0, 1), unit_map(v, 1, 2), unit_map(v, 0, 2)
    return v, e12, e23, e13, bracket_closure(v, R0, [e12, e23])


def z3_abelian():
    g = make_group(0, [3])
    r = make_bicharacter(g, [[1]])
    degs = [g.element([k]) for k in range(3)]
    space = make_space(g, {d: 1 for d in degs})
    a = make_map(space, degs[2], {d: [[1]] for d in degs})
    return space, r, a, bracket_closure(space, r, [a])


# ------------------------------------------------------- color bracket


def test_bracket_trivial_grading():
    v = gl(2)
    a = make_map(v, E0, {E0: [[0, 1], [0, 0]]})
    b = make_map(v, E0, {E0: [[1, 0], [0, 0]]})
    br = color_bracket(R0, a, b)
    assert flatten_map(br) == Matrix([[0, -1], [0, 0]])


def test_bracket_cyclic_self_vanishes():
    space, r, a, L = z3_abelian()
    assert color_bracket(r, a, a).is_zero()
    assert bracket_subspaces(full_subspace(L), full_subspace(L)).dim == 0


def test_bracket_super_anticommutator():
    z2 = make_group(0, [2])
    r = make_bicharacter(z2, [[-1]])
    odd = z2.element([1])
    even = z2.element([0])
    v = make_space(z2, {even: 1, odd: 1})
    a = make_map(v, odd, {even: [[1]], odd: [[0]]})
    br = color_bracket(r, a, a)
    assert br == scale_map(2, compose(a, a))


def test_bracket_degree_bookkeeping():
    rng = random.Random(47)
    for _, group, r in all_configs():
        for _ in range(8):
            space = random_space(rng, group)
            a = random_homogeneous_map(rng, space)
            b = random_homogeneous_map(rng, space)
            assert color_bracket(r, a, b).degree == a.degree + b.degree


# ------------------------------------------------------------ closure


def test_closure_single_generator():
    space, r, a, L = z3_abelian()
    assert L.dim == 1
    assert L.closed


def test_closure_empty():
    v = gl(2)
    L = bracket_closure(v, R0, [])
    assert L.dim == 0


def test_closure_heisenberg():
    v, e12, e23, e13, L = heisenberg()
    assert L.dim == 3
    assert L.contains(e13)


# ------------------------------------------------- subspaces and series


def test_bracket_subspace_heisenberg():
    v, e12, e23, e13, L = heisenberg()
    derived = bracket_subspaces(full_subspace(L), full_subspace(L))
    assert derived.dim == 1
    assert derived.contains(e13)


def test_bracket_with_zero_subspace():
    v, e12, e23, e13, L = heisenberg()
    zero = Subspace(L, [])
    assert bracket_subspaces(full_subspace(L), zero).dim == 0


def test_series_cyclic_abelian():
    _, _, _, L = z3_abelian()
    series = derived_series(L)
    assert [s.dim for s in series] == [1, 0]
    assert is_solvable(L)
    assert is_nilpotent_algebra(L)


def test_series_zero_algebra():
    v = gl(2)
    L = bracket_closure(v, R0, [])
    assert [s.dim for s in derived_series(L)] == [0]
    assert [s.dim for s in lower_central_series(L)] == [0]
    assert is_solvable(L) and is_nilpotent_algebra(L)


def test_series_borel_solvable_not_nilpotent():
    v = gl(2)
    e11 = unit_map(v, 0, 0)
    e12 = unit_map(v, 0, 1)
    L = bracket_closure(v, R0, [e11, e12])
    assert is_solvable(L)
    assert not is_nilpotent_algebra(L)
    assert [s.dim for s in lower_central_series(L)] == [2, 1]


def test_series_terms_are_graded():
    from colorlie import unflatten_map

    rng = random.Random(53)
    for _, group, r in torsion_free_configs()[:3]:
        L = random_nil_instance(rng, group, r)
        for term in derived_series(L) + lower_central_series(L):
            # per-degree dimensions account for the whole term, i.e. the
            # echelon basis splits into homogeneous pieces
            assert sum(term.dims_by_degree().values()) == term.dim
            for f in term.elements():
                # unflattening validates that every nonzero entry sits in
                # a block allowed by the element's single degree
                assert unflatten_map(L.space, f.degree, flatten_map(f)) == f


# -------------------------------------------------------------- center


def test_center_abelian_is_everything():
    _, _, _, L = z3_abelian()
    assert center(L).dim == L.dim


def test_center_zero_algebra():
    v = gl(2)
    L = bracket_closure(v, R0, [])
    assert center(L).dim == 0


def test_center_heisenberg():
    v, e12, e23, e13, L = heisenberg()
    z = center(L)
    assert z.dim == 1
    assert z.contains(e13)


def test_center_components_are_central():
    rng = random.Random(59)
    for _, group, r in torsion_free_configs()[:3]:
        for _ in range(5):
            L = random_nil_instance(rng, group, r)
            z = center(L)
            for f in z.elements():
                for b in L.basis:
                    assert color_bracket(L.r, f, b).is_zero()


# ------------------------------------------------------------- adjoint


def test_ad_central_is_zero():
    v, e12, e23, e13, L = heisenberg()
    assert ad_map(L, e13).is_zero()


def test_ad_cyclic_abelian_is_zero():
    _, _, a, L = z3_abelian()
    assert ad_map(L, a).is_zero()


def test_ad_heisenberg_action():
    v, e12, e23, e13, L = heisenberg()
    adx = ad_map(L, e12)
    # identify basis coordinates of L's profile space
    coords_e23 = L.coordinates(e23)
    coords_e13 = L.coordinates(e13)
    from colorlie.graded import apply, make_vector

    profile = L.profile_space()
    v23 = make_vector(profile, {E0: coords_e23})
    v13 = make_vector(profile, {E0: coords_e13})
    v12 = make_vector(profile, {E0: L.coordinates(e12)})
    assert apply(adx, v23) == v13
    assert apply(adx, v13).is_zero()
    assert apply(adx, v12).is_zero()


def test_ad_outside_algebra():
    v, e12, e23, e13, L = heisenberg()
    with pytest.raises(NotInAlgebra):
        ad_map(L, unit_map(v, 2, 0))


def test_ad_representation_dims():
    _, _, _, L = z3_abelian()
    assert ad_representation(L).dim == 0
    v, e12, e23, e13, H = heisenberg()
    assert ad_representation(H).dim == 2


def test_ad_representation_rank_nullity():
    rng = random.Random(61)
    for _, group, r in torsion_free_configs()[:3]:
        for _ in range(5):
            L = random_nil_instance(rng, group, r)
            assert ad_representation(L).dim == L.dim - center(L).dim


def test_ad_is_bracket_homomorphism():
    rng = random.Random(67)
    for _, group, r in torsion_free_configs():
        for _ in range(4):
            L = random_nil_instance(rng, group, r)
            for _ in range(3):
                x = rng.choice(list(L.basis))
                y = rng.choice(list(L.basis))
                lhs = ad_map(L, color_bracket(L.r, x, y))
                rhs = color_bracket(L.r, ad_map(L, x), ad_map(L, y))
                assert lhs == rhs


# ----------------------------------------------------- color identities


def test_color_skew_symmetry_randomized():
    rng = random.Random(71)
    for _, group, r in all_configs():
        for _ in range(15):
            space = random_space(rng, group)
            a = random_homogeneous_map(rng, space)
            b = random_homogeneous_map(rng, space)
            lhs = color_bracket(r, a, b)
            scalar = eval_bicharacter(r, b.degree, a.degree)
            rhs = scale_map(-scalar, color_bracket(r, b, a))
            assert lhs == rhs


def test_color_jacobi_randomized():
    rng = random.Random(73)
    for _, group, r in all_configs():
        for _ in range(15):
            space = random_space(rng, group)
            x = random_homogeneous_map(rng, space)
            y = random_homogeneous_map(rng, space)
            z = random_homogeneous_map(rng, space)
            lhs = color_bracket(r, color_bracket(r, x, y), z)
            scalar = eval_bicharacter(r, z.degree, y.degree)
            rhs = add_maps(
                color_bracket(r, x, color_bracket(r, y, z)),
                scale_map(scalar, color_bracket(r, color_bracket(r, x, z), y)),
            )
            assert lhs == rhs


# ------------------------------------------------- ad power expansion


def test_ad_power_expand_first_power():
    space, r, a, L = z3_abelian()
    tables = ad_power_expand(L, a, 1)
    exp = tables[a.degree]
    twist = eval_bicharacter(r, a.degree, a.degree)
    assert exp.terms == ((1, 0, Fraction(1)), (0, 1, -twist))


def test_ad_power_expand_binomial_trivial_twist():
    v, e12, e23, e13, L = heisenberg()
    tables = ad_power_expand(L, e12, 2)
    exp = tables[E0]
    assert exp.terms == ((2, 0, Fraction(1)), (1, 1, Fraction(-2)), (0, 2, Fraction(1)))


def test_ad_power_expand_matches_iteration():
    rng = random.Random(79)
    for _, group, r in torsion_free_configs()[:4]:
        for _ in range(4):
            L = random_nil_instance(rng, group, r)
            x = rng.choice(list(L.basis))
            m = rng.randint(1, 3)
            tables = ad_power_expand(L, x, m)
            for y in L.basis:
                expected = y
                for _ in range(m):
                    expected = color_bracket(L.r, x, expected)
                assert tables[y.degree].evaluate(x, y) == expected


# ------------------------------------- nilpotent implies ad nilpotent


def test_nilpotent_implies_ad_nilpotent_strict_upper():
    v = gl(2)
    e12 = unit_map(v, 0, 1)
    L = bracket_closure(v, R0, [e12])
    report = nilpotent_implies_ad_nilpotent_check(L, e12)
    assert report.nilpotent_input
    assert report.ad_power_is_zero
    assert report.holds


def test_nilpotent_implies_ad_nilpotent_vacuous():
    v = gl(2)
    ident = identity_map(v)
    L = bracket_closure(v, R0, [ident])
    report = nilpotent_implies_ad_nilpotent_check(L, ident)
    assert not report.nilpotent_input
    assert report.ad_power_is_zero is None
    assert report.holds


def test_nilpotent_implies_ad_nilpotent_randomized():
    rng = random.Random(83)
    for _, group, r in torsion_free_configs():
        for _ in range(5):
            L = random_nil_instance(rng, group, r)
            x = rng.choice(list(L.basis))
            assert is_nilpotent_matrix(flatten_map(x))
            report = nilpotent_implies_ad_nilpotent_check(L, x)
            assert report.nilpotent_input and report.holds


# ------------------------------------------------------------- ideals


def test_derived_and_center_are_ideals():
    v, e12, e23, e13, L = heisenberg()
    assert is_ideal(L, bracket_subspaces(full_subspace(L), full_subspace(L)))
    assert is_ideal(L, center(L))


def test_non_ideal_detected():
    v, e12, e23, e13, L = heisenberg()
    assert not is_ideal(L, Subspace(L, [e12]))


def test_is_ideal_parent_mismatch():
    v, e12, e23, e13, L = heisenberg()
    other = bracket_closure(v, R0, [e12])
    with pytest.raises(ParentMismatch):
        is_ideal(L, Subspace(other, [e12]))


# ------------------------------------------------- construction errors


def test_algebra_rejects_dependent_basis():
    from colorlie import ValidationError

    v = gl(2)
    e12 = unit_map(v, 0, 1)
    with pytest.raises(ValidationError):
        ColorAlgebra(v, R0, [e12, scale_map(2, e12)])


def test_algebra_verifies_claimed_closure():
    from colorlie import NotClosed

    v = gl(2)
    e = unit_map(v, 0, 1)
    f = unit_map(v, 1, 0)
    # span{e, f} is not closed: [e, f] = e11 - e22 lies outside
    with pytest.raises(NotClosed):
        ColorAlgebra(v, R0, [e, f], closed=True)


def test_series_require_closed():
    from colorlie import NotClosed

    v = gl(2)
    e = unit_map(v, 0, 1)
    f = unit_map(v, 1, 0)
    L = ColorAlgebra(v, R0, [e, f], closed=False)
    with pytest.raises(NotClosed):
        derived_series(L)
    with pytest.raises(NotClosed):
        center(L)


def test_bracket_mismatch_errors():
    from colorlie import GroupMismatch, SpaceMismatch

    v = gl(2)
    w = gl(3)
    a = unit_map(v, 0, 1)
    b = unit_map(w, 0, 1)
    with pytest.raises(SpaceMismatch):
        color_bracket(R0, a, b)
    z2 = make_group(0, [2])
    r2 = make_bicharacter(z2, [[-1]])
    with pytest.raises(GroupMismatch):
        color_bracket(r2, a, a)


def test_subspace_membership_validated():
    v, e12, e23, e13, L = heisenberg()
    small = bracket_closure(v, R0, [e12])
    with pytest.raises(NotInAlgebra):
        Subspace(small, [e23])
