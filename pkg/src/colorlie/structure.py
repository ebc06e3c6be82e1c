"""Constructive structure theory for linear Lie color algebras.

The two main engines are the common-annihilated-vector search for nil
algebras (Engel-type) and the common-homogeneous-eigenvector recursion
for solvable algebras over torsion-free gradings (Lie-type).  The
eigenvector recursion follows the classical four-step pattern:

  1. locate a color ideal K of codimension one, L = K + F z;
  2. recurse into K to obtain an eigenvector with weight lam;
  3. verify that L stabilizes the joint weight space W of (K, lam),
     which rests on lam([y, x]) = 0 (asserted exactly);
  4. find a homogeneous eigenvector of z inside W: for nonzero degree z
     this is a graded kernel vector (any homogeneous eigenvector of a
     degree-shifting map has eigenvalue zero), for degree-zero z a
     rational eigenvalue of some diagonal block of z restricted to W.

Everything is verified exactly; a conclusion failing after its
hypotheses were checked raises TheoremViolation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    EmptySpace,
    HypothesisFailed,
    IrrationalEigenvalue,
    NoHomogeneousEigenvector,
    NotInAlgebra,
    NotSolvable,
    TheoremViolation,
    TorsionDegree,
    TorsionGrading,
    ValidationError,
    ZeroAlgebra,
)
from .grading import GroupElement, element_add, make_bicharacter, make_group
from .graded import (
    GradedSpace,
    GradedVector,
    HomogeneousMap,
    _map,
    _vector,
    apply,
    flatten_map,
    flatten_vector,
    graded_kernel,
    homogeneous_eigenvalues,
    make_map,
    make_space,
    nilpotent_by_grading,
    standard_basis_vector,
    unflatten_vector,
)
from .algebra import (
    ColorAlgebra,
    Subspace,
    _GradedEchelon,
    ad_representation,
    bracket_closure,
    bracket_subspaces,
    center,
    color_bracket,
    derived_series,
    full_subspace,
    is_ideal,
    is_solvable,
    lower_central_series,
    _require_closed,
)
from .linalg import (
    Matrix,
    Poly,
    char_poly,
    inverse,
    kernel_basis,
    nil_subspace_check,
    rational_roots,
    solve_unique,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Weight:
    """Linear functional on an algebra, given by its values on the basis.

    A weight arising from a homogeneous eigenvector necessarily vanishes
    on every basis element of nonzero degree (the action would otherwise
    change the eigenvector's degree), which is enforced here.
    """

    algebra: ColorAlgebra
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != self.algebra.dim:
            raise ValidationError("one value per basis element is required")
        for v, b in zip(vals, self.algebra.basis):
            if v != 0 and not b.degree.is_zero():
                raise ValidationError(
                    "weights vanish on nonzero-degree basis elements"
                )

    def evaluate(self, f: HomogeneousMap) -> Fraction:
        coords = self.algebra.coordinates(f)
        if coords is None:
            raise NotInAlgebra("weight evaluated outside its algebra")
        return sum((c * v for c, v in zip(coords, self.values)), _ZERO)


@dataclass(frozen=True)
class ColorFlag:
    """Ordered homogeneous basis of V in which every element of the
    algebra is upper triangular, with the weight read off at each step."""

    ordered_basis: tuple[GradedVector, ...]
    weights: tuple[Weight, ...]


@dataclass(frozen=True)
class IdealChain:
    """Chain of color ideals 0 = L_0 < L_1 < ... < L_n = L, dim L_i = i."""

    chain: tuple[Subspace, ...]


@dataclass(frozen=True)
class EngelReport:
    all_ad_nilpotent: bool
    nilpotent: bool
    central_witness: HomogeneousMap | None


def _component_matrices(maps) -> list[Matrix]:
    return [flatten_map(f) for f in maps]


def _check_nil_components(L: ColorAlgebra, sub, what: str, policy: str, seed: int):
    for g in sub.degrees():
        if isinstance(sub, Subspace):
            mats = _component_matrices(
                [f for f in sub.elements() if f.degree == g]
            )
        else:
            mats = _component_matrices(sub.basis_of_degree(g))
        if not nil_subspace_check(mats, policy=policy, seed=seed):
            raise HypothesisFailed(
                f"{what} component at degree {g} contains non-nilpotent elements"
            )


def common_annihilated_vector(
    L: ColorAlgebra,
    check_hypotheses: bool = True,
    nil_policy: str = "auto",
    seed: int = 0,
) -> GradedVector:
    """Nonzero homogeneous v with x(v) = 0 for every x in L.

    For an algebra whose graded components are all nil, the intersection
    of the kernels is guaranteed nonzero; it is computed directly as a
    graded kernel rather than by replaying the inductive existence proof.
    """
    _require_closed(L)
    if L.space.total_dim == 0:
        raise EmptySpace("the representation space is zero")
    if check_hypotheses:
        _check_nil_components(L, L, "algebra", nil_policy, seed)
    kern = graded_kernel(L.basis, space=L.space)
    if not kern:
        if check_hypotheses:
            raise TheoremViolation(
                "nil algebra with no common annihilated vector"
            )
        raise NoHomogeneousEigenvector(
            "no nonzero homogeneous vector is annihilated by the algebra"
        )
    return kern[0]


def engel_check(
    L: ColorAlgebra, nil_policy: str = "auto", seed: int = 0
) -> EngelReport:
    """Check ad-nilpotency of all homogeneous elements and nilpotency of
    the algebra; when both hold and L is nonzero, produce a central
    witness and assert the implication between them."""
    _require_closed(L)
    ad_l = ad_representation(L)
    all_ad = all(
        nil_subspace_check(
            _component_matrices(ad_l.basis_of_degree(g)), policy=nil_policy, seed=seed
        )
        for g in ad_l.degrees()
    )
    nilpotent = lower_central_series(L)[-1].dim == 0
    z = center(L)
    witness = z.elements()[0] if z.dim > 0 else None
    if all_ad and L.dim > 0:
        if not nilpotent:
            raise TheoremViolation(
                "every homogeneous element is ad-nilpotent but the lower "
                "central series does not vanish"
            )
        if witness is None:
            raise TheoremViolation("ad-nilpotent algebra has trivial center")
    return EngelReport(all_ad, nilpotent, witness)


def codim_one_ideal(
    L: ColorAlgebra, check_hypotheses: bool = True
) -> tuple[Subspace, HomogeneousMap]:
    """Color ideal K with dim K = dim L - 1 and a homogeneous z with
    L = K + F z.

    K is built by extending a homogeneous basis of [L, L] to one of L and
    dropping the last extension vector; any subspace containing [L, L] is
    automatically an ideal, which also covers abelian L where [L, L] = 0.
    """
    _require_closed(L)
    if L.dim == 0:
        raise ZeroAlgebra("the zero algebra has no codimension-one ideal")
    if check_hypotheses and not is_solvable(L):
        raise NotSolvable("algebra is not solvable")
    derived = bracket_subspaces(full_subspace(L), full_subspace(L))
    ech = _GradedEchelon(L.space)
    for f in derived.elements():
        ech.add_map(f)
    chosen = [b for b in L.basis if ech.add_map(b)]
    if not chosen:
        raise NotSolvable("derived subalgebra equals the whole algebra")
    z = chosen[-1]
    k = Subspace(L, derived.elements() + chosen[:-1], _validate=False)
    if k.dim != L.dim - 1:
        raise TheoremViolation("codimension-one construction went wrong")
    return k, z


class _NotInvariant(Exception):
    pass


class _EmbeddedSubspace:
    """Graded subspace of V presented by per-degree coordinate bases,
    with exact restriction of invariant maps to subspace coordinates."""

    def __init__(self, ambient: GradedSpace, bases: dict):
        self.ambient = ambient
        self.bases = {g: list(vs) for g, vs in bases.items() if vs}
        dims = {g: len(vs) for g, vs in self.bases.items()}
        if dims:
            self.space = make_space(ambient.group, dims)
        else:
            self.space = GradedSpace(ambient.group, ())
        self.embed = {
            g: Matrix.from_columns(vs, rows=ambient.dim_of(g))
            for g, vs in self.bases.items()
        }

    @property
    def total_dim(self) -> int:
        return sum(len(vs) for vs in self.bases.values())

    def to_ambient(self, w: GradedVector) -> GradedVector:
        comps = {}
        for g, c in w.components:
            comps[g] = self.embed[g].apply(c)
        return _vector(self.ambient, comps)

    def restrict(self, f: HomogeneousMap) -> HomogeneousMap:
        blocks = {}
        for g in self.space.degrees:
            src = self.embed[g]
            target = element_add(g, f.degree)
            w_t = self.space.dim_of(target)
            amb_block = f.block(g)
            cols = []
            for j in range(src.cols):
                img = amb_block.apply(tuple(src.data[i][j] for i in range(src.rows)))
                if w_t == 0:
                    if any(x != 0 for x in img):
                        raise _NotInvariant
                    continue
                coords = solve_unique(self.embed[target], img)
                if coords is None:
                    raise _NotInvariant
                cols.append(coords)
            if w_t > 0 and cols:
                blocks[g] = Matrix.from_columns(cols, rows=w_t)
        return _map(self.space, f.degree, blocks)


def _weight_space(k_alg: ColorAlgebra, lam: Weight) -> _EmbeddedSubspace:
    """W_g = joint solution space of x w = lam(x) w over the basis of K;
    nonzero-degree basis elements contribute kernel conditions only."""
    space = k_alg.space
    bases = {}
    for g, n in space.dims:
        rows: list = []
        for val, x in zip(lam.values, k_alg.basis):
            if x.degree.is_zero():
                m = x.block(g) - Matrix.identity(n).scale(val)
                rows.extend(m.data)
            else:
                rows.extend(x.block(g).data)
        if rows:
            vecs = kernel_basis(Matrix(rows, cols=n))
        else:
            vecs = [
                tuple(Fraction(1 if j == i else 0) for j in range(n))
                for i in range(n)
            ]
        bases[g] = vecs
    return _EmbeddedSubspace(space, bases)


def _check_triangularization_hypotheses(
    L: ColorAlgebra, nil_policy: str, seed: int
):
    _require_closed(L)
    if L.space.total_dim == 0:
        raise EmptySpace("the representation space is zero")
    if not L.space.group.is_torsion_free():
        raise TorsionGrading(
            "grading group has torsion; triangularization can fail "
            "(run the cyclic-group demo for a 3-dimensional example)"
        )
    if not is_solvable(L):
        raise NotSolvable("algebra is not solvable")
    derived = bracket_subspaces(full_subspace(L), full_subspace(L))
    _check_nil_components(L, derived, "derived subalgebra", nil_policy, seed)


def common_homogeneous_eigenvector(
    L: ColorAlgebra,
    check_hypotheses: bool = True,
    nil_policy: str = "auto",
    seed: int = 0,
) -> tuple[GradedVector, Weight]:
    """Common homogeneous eigenvector of a solvable algebra over a
    torsion-free grading, with the weight functional on L's basis."""
    _require_closed(L)
    if L.space.total_dim == 0:
        raise EmptySpace("the representation space is zero")
    if check_hypotheses:
        _check_triangularization_hypotheses(L, nil_policy, seed)
    return _eigenvector_search(L, strict=check_hypotheses)


def _eigenvector_search(L: ColorAlgebra, strict: bool) -> tuple[GradedVector, Weight]:
    if L.dim == 0:
        g0, _ = L.space.dims[0]
        return standard_basis_vector(L.space, g0, 0), Weight(L, ())

    k_sub, z = codim_one_ideal(L, check_hypotheses=False)
    k_alg = ColorAlgebra(
        L.space, L.r, tuple(k_sub.elements()), closed=True, _validate=False
    )
    _, lam_k = _eigenvector_search(k_alg, strict)

    w_space = _weight_space(k_alg, lam_k)
    if w_space.total_dim == 0:
        raise TheoremViolation("weight space vanished despite recursive success")

    # lam kills brackets of the algebra into the ideal, otherwise the
    # weight space cannot be stable under L
    for y in k_alg.basis:
        for x in L.basis:
            if lam_k.evaluate(color_bracket(L.r, y, x)) != 0:
                if strict:
                    raise TheoremViolation(
                        "weight does not vanish on a bracket into the ideal"
                    )
                raise NoHomogeneousEigenvector(
                    "candidate weight is not invariant under the algebra"
                )

    try:
        for x in L.basis:
            w_space.restrict(x)
    except _NotInvariant:
        if strict:
            raise TheoremViolation("algebra does not stabilize the weight space")
        raise NoHomogeneousEigenvector(
            "the algebra does not stabilize the candidate weight space"
        )

    z_res = w_space.restrict(z)
    if z.degree.is_zero():
        pick = None
        first_irrational: Poly | None = None
        for report in homogeneous_eigenvalues(z_res):
            if report.pairs and pick is None:
                lam_z, w = report.pairs[0]
                pick = (lam_z, w)
            if report.irrational_factor is not None and first_irrational is None:
                first_irrational = report.irrational_factor
        if pick is None:
            raise IrrationalEigenvalue(
                "no rational eigenvalue on any component of the weight space "
                f"(characteristic factor {first_irrational})",
                first_irrational,
            )
        lam_z, w = pick
    else:
        kern = graded_kernel([z_res], space=w_space.space)
        if not kern:
            if strict:
                raise TheoremViolation(
                    "degree-shifting complement has no homogeneous kernel "
                    "vector in the weight space"
                )
            raise NoHomogeneousEigenvector(
                "complement element has no homogeneous eigenvector in the "
                "weight space (its degree has finite order)"
            )
        lam_z, w = _ZERO, kern[0]

    v0 = w_space.to_ambient(w)

    # extend the weight from K + F z to the basis of L
    columns = [
        [x for row in flatten_map(f).data for x in row] for f in k_alg.basis
    ]
    columns.append([x for row in flatten_map(z).data for x in row])
    system = Matrix.from_columns(columns, rows=len(columns[0]))
    values = []
    for b in L.basis:
        target = [x for row in flatten_map(b).data for x in row]
        coords = solve_unique(system, target)
        if coords is None:
            raise TheoremViolation("ideal plus complement failed to span")
        val = sum(
            (c * v for c, v in zip(coords[:-1], lam_k.values)), _ZERO
        ) + coords[-1] * lam_z
        values.append(val)
    lam = Weight(L, tuple(values))

    for val, b in zip(values, L.basis):
        if apply(b, v0) != v0.scale(val):
            raise TheoremViolation("computed vector is not a common eigenvector")
    return v0, lam


def _quotient_by_line(comp) -> tuple[Matrix, Matrix]:
    """Projection and section for quotienting one component by a line."""
    n = len(comp)
    p = next(i for i, x in enumerate(comp) if x != 0)
    others = [j for j in range(n) if j != p]
    proj_rows = []
    for j in others:
        row = [_ZERO] * n
        row[j] = _ONE
        row[p] = -comp[j] / comp[p]
        proj_rows.append(row)
    proj = Matrix(proj_rows, cols=n)
    sect = Matrix.from_columns(
        [tuple(_ONE if i == j else _ZERO for i in range(n)) for j in others],
        rows=n,
    )
    return proj, sect


def _induced_map(
    new_space: GradedSpace, proj: dict, sect: dict, f: HomogeneousMap
) -> HomogeneousMap:
    blocks = {}
    for h in new_space.degrees:
        target = element_add(h, f.degree)
        if new_space.dim_of(target) == 0:
            continue
        blocks[h] = proj[target] * f.block(h) * sect[h]
    return _map(new_space, f.degree, blocks)


def color_flag(
    L: ColorAlgebra,
    check_hypotheses: bool = True,
    nil_policy: str = "auto",
    seed: int = 0,
) -> ColorFlag:
    """Homogeneous basis of V in which every element of L is upper
    triangular, obtained by repeatedly splitting off a common homogeneous
    eigenvector and passing to the graded quotient.

    The result is verified exactly: the change of basis is applied to
    every basis element of L, strict lower entries must vanish and the
    diagonal must reproduce the collected weights.
    """
    _require_closed(L)
    if check_hypotheses:
        _check_triangularization_hypotheses(L, nil_policy, seed)
    if L.space.total_dim == 0:
        raise EmptySpace("the representation space is zero")

    flag_vectors: list[GradedVector] = []
    weight_rows: list[tuple[Fraction, ...]] = []
    cur_space = L.space
    cur_alg = L
    orig_images = list(L.basis)
    lift = {g: Matrix.identity(n) for g, n in L.space.dims}
    depth = 0

    while cur_space.total_dim > 0:
        try:
            v, lam = _eigenvector_search(cur_alg, strict=check_hypotheses)
            weight_rows.append(
                tuple(lam.evaluate(im) for im in orig_images)
            )
        except (TheoremViolation, NoHomogeneousEigenvector,
                IrrationalEigenvalue, HypothesisFailed) as e:
            e.flag_depth = depth
            raise

        d = v.degree()
        comp = v.components[0][1]
        flag_vectors.append(
            _vector(L.space, {d: tuple(lift[d].apply(comp))})
        )

        proj, sect, new_dims = {}, {}, {}
        for g, n in cur_space.dims:
            if g == d:
                p, s = _quotient_by_line(comp)
            else:
                p, s = Matrix.identity(n), Matrix.identity(n)
            proj[g], sect[g] = p, s
            if p.rows > 0:
                new_dims[g] = p.rows
        new_space = (
            make_space(L.space.group, new_dims)
            if new_dims
            else GradedSpace(L.space.group, ())
        )

        ech = _GradedEchelon(new_space)
        for b in cur_alg.basis:
            ech.add_map(_induced_map(new_space, proj, sect, b))
        orig_images = [
            _induced_map(new_space, proj, sect, im) for im in orig_images
        ]
        cur_alg = ColorAlgebra(
            new_space, L.r, tuple(ech.maps()), closed=True, _validate=False
        )
        lift = {
            g: lift[g] * sect[g]
            for g, _ in new_space.dims
        }
        cur_space = new_space
        depth += 1

    n = L.space.total_dim
    t = Matrix.from_columns([flatten_vector(v) for v in flag_vectors], rows=n)
    try:
        t_inv = inverse(t)
    except ValueError:
        raise TheoremViolation("flag vectors do not form a basis")
    for i, b in enumerate(L.basis):
        m = t_inv * flatten_map(b) * t
        for rr in range(n):
            for cc in range(rr):
                if m.data[rr][cc] != 0:
                    raise TheoremViolation(
                        "matrix is not upper triangular in the flag basis"
                    )
            if m.data[rr][rr] != weight_rows[rr][i]:
                raise TheoremViolation(
                    "diagonal entries disagree with the collected weights"
                )
    weights = tuple(Weight(L, row) for row in weight_rows)
    return ColorFlag(tuple(flag_vectors), weights)


def ideal_chain(
    L: ColorAlgebra,
    check_hypotheses: bool = True,
    nil_policy: str = "auto",
    seed: int = 0,
) -> IdealChain:
    """Chain of color ideals with dim L_i = i, from the flag of the
    adjoint representation.

    The adjoint algebra acts on L's own graded coordinate space, so its
    flag vectors are literally elements of L; a subspace invariant under
    every ad x is exactly a color ideal.
    """
    _require_closed(L)
    if check_hypotheses:
        if not L.space.group.is_torsion_free():
            raise TorsionGrading("grading group has torsion")
        if not is_solvable(L):
            raise NotSolvable("algebra is not solvable")
        derived = bracket_subspaces(full_subspace(L), full_subspace(L))
        _check_nil_components(L, derived, "derived subalgebra", nil_policy, seed)
    if L.dim == 0:
        return IdealChain((Subspace(L, [], _validate=False),))

    ad_l = ad_representation(L)
    flag = color_flag(
        ad_l, check_hypotheses=check_hypotheses, nil_policy=nil_policy, seed=seed
    )

    elements = []
    for v in flag.ordered_basis:
        d = v.degree()
        comp = v.component(d)
        coords = [_ZERO] * L.dim
        for idx, c in zip(L.basis_indices_of_degree(d), comp):
            coords[idx] = c
        elements.append(L.from_coordinates(coords))

    chain = [Subspace(L, [], _validate=False)]
    for i in range(1, len(elements) + 1):
        sub = Subspace(L, elements[:i], _validate=False)
        if sub.dim != i:
            raise TheoremViolation("chain member has the wrong dimension")
        if not is_ideal(L, sub):
            raise TheoremViolation("chain member is not a color ideal")
        chain.append(sub)
    return IdealChain(tuple(chain))


@dataclass(frozen=True)
class Z3Report:
    """Everything the cyclic-grading counterexample demonstrates: a
    1-dimensional abelian (hence solvable) algebra over a Z_3 grading
    whose generator cannot be made upper triangular in any homogeneous
    basis."""

    degree: GroupElement
    algebra_dim: int
    derived_dims: tuple[int, ...]
    derived_zero: bool
    solvable: bool
    nil_condition_vacuous: bool
    cube_is_identity: bool
    characteristic: Poly
    rational_eigenvalues: tuple[tuple[Fraction, int], ...]
    ungraded_eigenvector: tuple[Fraction, ...]
    eigenvector_homogeneous: bool
    grading_certificate_error: str
    flag_error: str
    flag_error_unchecked: str
    orderings: tuple[tuple[tuple[str, ...], bool], ...]
    orderings_checked: int
    triangularizable: bool


def z3_counterexample() -> Z3Report:
    """Build the order-3 cyclic permutation generator over a Z_3 grading
    with trivial bicharacter and verify, exhaustively over all homogeneous
    basis orderings, that it is never upper triangular.

    Each component is one-dimensional, so up to scaling (which cannot
    change the zero pattern) the homogeneous bases are exactly the six
    orderings of the component basis vectors.
    """
    group = make_group(0, [3])
    r = make_bicharacter(group, [[1]])
    g0, g1, g2 = (group.element([k]) for k in (0, 1, 2))
    space = make_space(group, {g0: 1, g1: 1, g2: 1})
    a = make_map(space, g2, {g0: [[1]], g1: [[1]], g2: [[1]]})

    L = bracket_closure(space, r, [a])
    if L.dim != 1:
        raise TheoremViolation("span of the generator is not 1-dimensional")
    series = derived_series(L)
    derived_dims = tuple(s.dim for s in series)
    solvable = series[-1].dim == 0
    derived = bracket_subspaces(full_subspace(L), full_subspace(L))
    derived_zero = derived.dim == 0
    nil_vacuous = all(
        nil_subspace_check(
            _component_matrices([f for f in derived.elements() if f.degree == g])
        )
        for g in derived.degrees()
    )

    flat = flatten_map(a)
    cube_identity = flat.power(3) == Matrix.identity(3)
    cp = char_poly(flat)
    roots = tuple(rational_roots(cp))
    eig = kernel_basis(flat - Matrix.identity(3))[0]
    eig_hom = unflatten_vector(space, eig).is_homogeneous()

    try:
        nilpotent_by_grading(a)
        grading_err = ""
    except TorsionDegree:
        grading_err = "TorsionDegree"

    try:
        color_flag(L)
        flag_err = ""
    except TorsionGrading:
        flag_err = "TorsionGrading"

    try:
        color_flag(L, check_hypotheses=False)
        flag_err_unchecked = ""
    except NoHomogeneousEigenvector:
        flag_err_unchecked = "NoHomogeneousEigenvector"

    labels = tuple(str(g) for g in space.degrees)
    orderings = []
    triangularizable = False
    for perm in itertools.permutations(range(3)):
        upper = all(
            flat.data[perm[i]][perm[j]] == 0
            for i in range(3)
            for j in range(i)
        )
        orderings.append((tuple(labels[p] for p in perm), upper))
        triangularizable = triangularizable or upper

    ok = (
        a.degree == g2
        and derived_zero
        and solvable
        and nil_vacuous
        and cube_identity
        and grading_err == "TorsionDegree"
        and flag_err == "TorsionGrading"
        and flag_err_unchecked == "NoHomogeneousEigenvector"
        and not triangularizable
        and not eig_hom
    )
    if not ok:
        raise TheoremViolation("counterexample verification failed")

    return Z3Report(
        degree=a.degree,
        algebra_dim=L.dim,
        derived_dims=derived_dims,
        derived_zero=derived_zero,
        solvable=solvable,
        nil_condition_vacuous=nil_vacuous,
        cube_is_identity=cube_identity,
        characteristic=cp,
        rational_eigenvalues=roots,
        ungraded_eigenvector=eig,
        eigenvector_homogeneous=eig_hom,
        grading_certificate_error=grading_err,
        flag_error=flag_err,
        flag_error_unchecked=flag_err_unchecked,
        orderings=tuple(orderings),
        orderings_checked=len(orderings),
        triangularizable=triangularizable,
    )
