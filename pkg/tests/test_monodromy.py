import itertools
from fractions import Fraction

import pytest

from conftest import (
    apply_table,
    mulclose_mod,
    random_geom_word,
    random_valid_datum,
    seeded,
)
from symtorus import _orbitpy, orbitkernel
from symtorus.errors import OrbitSizeExceeded, OrderViolation, SumViolation
from symtorus.intmat import IntMatrix, elementary_symplectic, int_inverse
from symtorus.monodromy import (
    GeomMatrix,
    _action_tables,
    _encode,
    _orbit_states,
    _state_modulus,
    act,
    canonical_form,
    equivalent,
    free_invariant,
    group_generators,
    is_geometric_matrix,
    orbit,
    orbit_size,
    torsion_monodromy_trivial,
    validate_datum,
)
from symtorus.orbisurface import FuchsianSignature
from symtorus.torus import TorusElement

HALF = Fraction(1, 2)


def T(*coords):
    return TorusElement(coords)


SIG222 = FuchsianSignature(0, (2, 2, 2))
C222 = (T(HALF, 0), T(0, HALF), T(HALF, HALF))


def test_validate_datum_accepts_half_torsion_triple():
    datum = validate_datum(SIG222, (), C222)
    assert datum.torsion == C222
    assert datum.dim == 2


def test_validate_datum_order_violation():
    sig = FuchsianSignature(0, (2, 2))
    with pytest.raises(OrderViolation) as info:
        validate_datum(sig, (), (T(Fraction(1, 3), 0), T(HALF, 0)))
    assert info.value.indices == (0,)


def test_validate_datum_sum_violation():
    sig = FuchsianSignature(0, (2, 2))
    with pytest.raises(SumViolation):
        validate_datum(sig, (), (T(HALF, 0), T(0, HALF)))


def test_validate_datum_zero_torsion_is_order_violation():
    sig = FuchsianSignature(0, (2, 2))
    with pytest.raises(OrderViolation):
        validate_datum(sig, (), (T(0, 0), T(0, 0)))


def test_is_geometric_identity():
    sig = FuchsianSignature(1, (5, 10))
    assert is_geometric_matrix(IntMatrix.identity(4), sig)


def test_is_geometric_rejects_order_swapping_permutation():
    sig = FuchsianSignature(1, (5, 10))
    swap = IntMatrix([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ])
    assert not is_geometric_matrix(swap, sig)


def test_is_geometric_accepts_sp_block_with_arbitrary_c():
    sig = FuchsianSignature(1, (2, 2))
    b = IntMatrix([
        [1, 1, 0, 0],
        [0, 1, 0, 0],
        [1, 1, 1, 0],
        [1, 1, 0, 1],
    ])
    assert is_geometric_matrix(b, sig)


def test_is_geometric_rejects_nonzero_upper_right():
    sig = FuchsianSignature(1, (2,))
    b = IntMatrix([
        [1, 0, 1],
        [0, 1, 0],
        [0, 0, 1],
    ])
    assert not is_geometric_matrix(b, sig)


def test_is_geometric_size_mismatch():
    with pytest.raises(ValueError):
        is_geometric_matrix(IntMatrix.identity(3), FuchsianSignature(1, (5, 10)))


def test_generators_g0_n2_single_swap():
    gens = group_generators(FuchsianSignature(0, (2, 2)))
    assert len(gens) == 1
    assert gens[0].matrix == IntMatrix([[0, 1], [1, 0]])


def test_generators_torus_no_cone_points():
    gens = group_generators(FuchsianSignature(1, ()))
    mats = {g.matrix for g in gens}
    assert mats == {elementary_symplectic(1, 2, 1), elementary_symplectic(2, 1, 1)}


def test_generators_counts_for_distinct_orders():
    gens = group_generators(FuchsianSignature(1, (5, 10)))
    # 2 symplectic embeddings + 4 unit lower-left blocks, no swaps
    assert len(gens) == 6


def test_act_identity():
    datum = validate_datum(SIG222, (), C222)
    ident = GeomMatrix(IntMatrix.identity(3), SIG222)
    assert act(ident, datum) == datum


def test_act_swap_fixes_equal_entries():
    sig = FuchsianSignature(0, (2, 2))
    datum = validate_datum(sig, (), (T(HALF, 0), T(HALF, 0)))
    swap = GeomMatrix(IntMatrix([[0, 1], [1, 0]]), sig)
    assert act(swap, datum) == datum


def test_act_unit_c_block_mixes_torsion_into_free_slot():
    # A single cone point can never carry a valid datum (its class dies
    # in homology, forcing c1 = 0 against order(c1) = o1), so the unit
    # lower-left mixing is exercised on (1; 2, 2).
    sig = FuchsianSignature(1, (2, 2))
    a1, b1 = T(Fraction(1, 4), 0), T(0, Fraction(1, 4))
    c1 = T(HALF, HALF)
    datum = validate_datum(sig, (a1, b1), (c1, c1))
    rows = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    rows[2][0] = 1
    b = GeomMatrix(IntMatrix(rows), sig)
    # explicit inverse: B^-1 = I - E31, so the new a1 slot picks up -c1
    inv_rows = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    inv_rows[2][0] = -1
    assert int_inverse(b.matrix) == IntMatrix(inv_rows)
    moved = act(b, datum)
    assert moved.free == (a1 - c1, b1)
    assert moved.torsion == (c1, c1)


def test_act_is_group_action():
    rng = seeded(17)
    for _ in range(15):
        datum = random_valid_datum(rng)
        sig = datum.signature
        if not group_generators(sig):
            continue
        b1 = random_geom_word(sig, rng)
        b2 = random_geom_word(sig, rng)
        assert act(b1, act(b2, datum)) == act(b1 * b2, datum)


def test_act_preserves_validity():
    rng = seeded(19)
    for _ in range(15):
        datum = random_valid_datum(rng)
        word = random_geom_word(datum.signature, rng)
        if word is None:
            continue
        moved = act(word, datum)  # act re-validates internally
        assert moved.signature == datum.signature


def test_orbit_singleton_for_equal_pair():
    sig = FuchsianSignature(0, (2, 2))
    datum = validate_datum(sig, (), (T(HALF, 0), T(HALF, 0)))
    assert orbit(datum) == {(T(HALF, 0), T(HALF, 0))}


def test_orbit_of_three_half_points_is_all_permutations():
    datum = validate_datum(SIG222, (), C222)
    got = orbit(datum)
    assert got == {p for p in itertools.permutations(C222)}


def test_orbit_zero_free_datum_is_singleton():
    sig = FuchsianSignature(1, ())
    datum = validate_datum(sig, (T(0, 0), T(0, 0)), (), dim=2)
    assert orbit(datum) == {(T(0, 0), T(0, 0))}


def test_orbit_cap():
    rng = seeded(23)
    datum = random_valid_datum(rng)
    with pytest.raises(OrbitSizeExceeded):
        orbit(datum, max_states=1)


def test_equivalent_reflexive_and_permutation():
    datum = validate_datum(SIG222, (), C222)
    assert equivalent(datum, datum)
    cyc = validate_datum(SIG222, (), (C222[2], C222[0], C222[1]))
    assert equivalent(datum, cyc)


def test_equivalent_distinguishes_singletons():
    sig = FuchsianSignature(0, (2, 2))
    a = validate_datum(sig, (), (T(HALF, 0), T(HALF, 0)))
    b = validate_datum(sig, (), (T(0, HALF), T(0, HALF)))
    assert not equivalent(a, b)


def test_equivalent_signature_mismatch_is_false():
    a = validate_datum(SIG222, (), C222)
    sig = FuchsianSignature(0, (2, 2))
    b = validate_datum(sig, (), (T(HALF, 0), T(HALF, 0)))
    assert equivalent(a, b) is False


def test_equivalent_is_equivalence_relation_on_samples():
    rng = seeded(29)
    data = [random_valid_datum(rng) for _ in range(8)]
    for d in data:
        assert equivalent(d, d)
    for d1 in data:
        for d2 in data:
            assert equivalent(d1, d2) == equivalent(d2, d1)
    for d1 in data:
        for d2 in data:
            for d3 in data:
                if equivalent(d1, d2) and equivalent(d2, d3):
                    assert equivalent(d1, d3)


def test_canonical_form_constant_on_orbit():
    datum = validate_datum(SIG222, (), C222)
    base = canonical_form(datum)
    for p in itertools.permutations(C222):
        assert canonical_form(validate_datum(SIG222, (), p)) == base


def test_canonical_form_invariant_under_random_words():
    rng = seeded(31)
    for _ in range(25):
        datum = random_valid_datum(rng)
        word = random_geom_word(datum.signature, rng)
        if word is None:
            continue
        assert canonical_form(act(word, datum)) == canonical_form(datum)


def test_canonical_form_singleton():
    sig = FuchsianSignature(0, (2, 2))
    datum = validate_datum(sig, (), (T(HALF, 0), T(HALF, 0)))
    assert canonical_form(datum) == (T(HALF, 0), T(HALF, 0))


def test_free_invariant_zero_datum():
    zero = (T(0, 0), T(0, 0))
    assert free_invariant(1, zero) == zero


def test_free_invariant_slot_swap():
    a = free_invariant(1, (T(HALF, 0), T(0, 0)))
    b = free_invariant(1, (T(0, 0), T(HALF, 0)))
    assert a == b


def test_free_invariant_pair_via_bfs():
    start = (T(HALF, 0), T(0, HALF))
    form = free_invariant(1, start)
    # oracle: enumerate all 6 invertible 2x2 matrices over Z/2 (the full
    # symplectic group in rank 2) and apply them to the pair directly
    import itertools as it

    mats = [m for m in it.product((0, 1), repeat=4)
            if (m[0] * m[3] - m[1] * m[2]) % 2 == 1]
    reachable = set()
    for a, b, c, d in mats:
        reachable.add((
            a * start[0] + c * start[1],
            b * start[0] + d * start[1],
        ))
    assert form == min(reachable, key=lambda p: (p[0].coords, p[1].coords))
    assert form == (T(0, HALF), T(HALF, 0))


def test_torsion_monodromy_trivial():
    free_datum = validate_datum(FuchsianSignature(1, ()), (T(HALF, 0), T(0, 0)), (), dim=2)
    assert torsion_monodromy_trivial(free_datum)
    assert not torsion_monodromy_trivial(validate_datum(SIG222, (), C222))


def orbit_by_closure_oracle(datum):
    """Exhaustive oracle: close the action tables in GL(m, Z/N), apply all."""
    sig = datum.signature
    m = 2 * sig.genus + sig.num_cone_points
    modulus = _state_modulus(datum)
    tables = _action_tables(sig, modulus)
    start = _encode(datum, modulus)
    if not tables or modulus == 1:
        return frozenset([start])
    group = mulclose_mod(tables, modulus)
    return frozenset(
        apply_table(mat, start, m, datum.dim, modulus) for mat in group
    )


def test_orbit_matches_group_closure_oracle():
    rng = seeded(37)
    for _ in range(12):
        datum = random_valid_datum(rng)
        bfs, _ = _orbit_states(datum, 10 ** 6)
        assert frozenset(bfs) == orbit_by_closure_oracle(datum)


def test_orbit_size_helper():
    assert orbit_size(validate_datum(SIG222, (), C222)) == 6


def test_kernels_agree():
    rng = seeded(41)
    for _ in range(8):
        datum = random_valid_datum(rng)
        sig = datum.signature
        m = 2 * sig.genus + sig.num_cone_points
        if m == 0:
            continue
        modulus = _state_modulus(datum)
        tables = _action_tables(sig, modulus)
        if not tables or modulus == 1:
            continue
        start = _encode(datum, modulus)
        pure = _orbitpy.bfs_orbit(start, tables, m, datum.dim, modulus, 10 ** 6)
        selected = orbitkernel.bfs_orbit(start, tables, m, datum.dim, modulus,
                                         10 ** 6)
        assert pure == selected


def _block_shape_members_mod2(g, orders):
    """Direct enumeration of the reduced group: all block matrices mod 2."""
    n = len(orders)

    def symplectic_mod2(mat):
        size = 2 * g
        j = [[0] * size for _ in range(size)]
        for k in range(g):
            j[2 * k][2 * k + 1] = 1
            j[2 * k + 1][2 * k] = 1  # -1 == 1 mod 2
        prod = [[sum(mat[i][k] * j[k][c] for k in range(size)) % 2
                 for c in range(size)] for i in range(size)]
        both = [[sum(prod[i][k] * mat[c][k] for k in range(size)) % 2
                 for c in range(size)] for i in range(size)]
        return both == j

    members = set()
    perms = [p for p in itertools.permutations(range(n))
             if all(orders[p[i]] == orders[i] for i in range(n))]
    for a_flat in itertools.product((0, 1), repeat=4 * g * g):
        a = [list(a_flat[i * 2 * g:(i + 1) * 2 * g]) for i in range(2 * g)]
        if g and not symplectic_mod2(a):
            continue
        for c_flat in itertools.product((0, 1), repeat=n * 2 * g):
            c = [list(c_flat[i * 2 * g:(i + 1) * 2 * g]) for i in range(n)]
            for p in perms:
                rows = [tuple(a[i] + [0] * n) for i in range(2 * g)]
                rows += [tuple(c[i] + [1 if p[i] == j else 0
                                       for j in range(n)]) for i in range(n)]
                members.add(tuple(rows))
    return members


@pytest.mark.parametrize("g,orders", [(1, (2,)), (1, (2, 2)), (0, (2, 2, 2))])
def test_generators_span_full_block_group_mod2(g, orders):
    sig = FuchsianSignature(g, orders)
    gens = [tuple(tuple(x % 2 for x in row) for row in gm.matrix.entries)
            for gm in group_generators(sig)]
    assert mulclose_mod(gens, 2) == _block_shape_members_mod2(g, orders)


@pytest.mark.skipif("cython" not in orbitkernel.available_kernels(),
                    reason="compiled kernel not built")
def test_compiled_kernel_matches_pure_python_directly():
    from symtorus import _orbitcore

    rng = seeded(43)
    for _ in range(8):
        datum = random_valid_datum(rng)
        sig = datum.signature
        m = 2 * sig.genus + sig.num_cone_points
        modulus = _state_modulus(datum)
        tables = _action_tables(sig, modulus)
        if m == 0 or not tables or modulus == 1:
            continue
        start = _encode(datum, modulus)
        assert (_orbitcore.bfs_orbit(start, tables, m, datum.dim, modulus, 10 ** 6)
                == _orbitpy.bfs_orbit(start, tables, m, datum.dim, modulus, 10 ** 6))
