from e510.scalars import Q
from e510.sl5_reps import (
    build_irrep, weyl_dim, gt_pattern_count, dual_weight, eps_to_coords,
    highest_weight_vectors, act_ambient, ambient_monomial, parse_weight,
    weight_str,
)

# hand-evaluated Weyl product formula values
WEYL_HAND = {
    (0, 0, 0, 0): 1,
    (1, 0, 0, 0): 5,
    (0, 1, 0, 0): 10,
    (0, 0, 1, 0): 10,
    (0, 0, 0, 1): 5,
    (2, 0, 0, 0): 15,
    (0, 0, 0, 2): 15,
    (3, 0, 0, 0): 35,
    (1, 0, 0, 1): 24,
    (1, 1, 0, 0): 40,
    (0, 2, 0, 0): 50,
    (1, 1, 0, 1): 175,
    (1, 1, 1, 0): 280,
    (2, 2, 0, 0): 420,
    (2, 0, 0, 3): 450,
    (0, 0, 3, 2): 1260,
}


def test_weyl_dim_hand_values():
    for w, n in WEYL_HAND.items():
        assert weyl_dim(w) == n


def test_weyl_dim_dual_symmetry():
    for w in WEYL_HAND:
        assert weyl_dim(dual_weight(w)) == weyl_dim(w)


def test_gt_pattern_count_agrees():
    for w in [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0),
              (2, 0, 0, 0), (1, 0, 0, 1), (0, 2, 0, 0), (1, 1, 0, 1),
              (2, 1, 1, 2), (3, 0, 0, 3)]:
        assert gt_pattern_count(w) == weyl_dim(w)


def test_build_small_irreps():
    for w in [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
              (1, 1, 0, 0), (2, 0, 0, 0), (1, 0, 0, 1), (0, 0, 1, 1)]:
        rep = build_irrep(w)
        assert rep.dim == weyl_dim(w)
        # the highest weight line is index 0 with the declared weight
        assert rep.coord_weight(0) == w


def test_standard_module_action():
    rep = build_irrep((1, 0, 0, 0))
    # basis of F(1,0,0,0) is x1..x5 reached by lowerings in order
    assert rep.dim == 5
    weights = sorted(rep.eps_weights)
    expect = sorted(tuple(1 if i == k else 0 for i in range(5))
                    for k in range(5))
    assert weights == expect
    # f1 x1 = x2: lowering the highest weight vector hits basis index 1
    img = rep.act(2, 1, {0: Q(1)})
    assert img == {1: Q(1)}
    # e1 f1 x1 = x1
    back = rep.act(1, 2, img)
    assert back == {0: Q(1)}


def test_dual_standard_action():
    rep = build_irrep((0, 0, 0, 1))
    assert rep.dim == 5
    # hw vector is x5*; e4 kills it, f4 x5* = -x4*
    assert rep.act(4, 5, {0: Q(1)}) == {}
    low = rep.act(5, 4, {0: Q(1)})
    assert list(low.values()) == [Q(1)]  # basis vector recorded as the image


def test_raising_kills_only_highest():
    for w in [(1, 1, 0, 0), (0, 0, 1, 1), (2, 0, 0, 1)]:
        rep = build_irrep(w)
        hw = highest_weight_vectors(rep)
        assert len(hw) == 1
        assert hw[0] == {0: Q(1)}


def test_diagonal_action_matches_weights():
    rep = build_irrep((0, 1, 0, 0))
    for j in range(rep.dim):
        for a in range(1, 6):
            col = rep.act(a, a, {j: Q(1)})
            ev = rep.eps_weights[j][a - 1]
            assert col == ({j: Q(ev)} if ev else {})


def test_ambient_action_commutator():
    # [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb on a sample vector
    rep = build_irrep((1, 1, 0, 1))
    v = rep.basis[7]
    for (a, b, c, d) in [(1, 2, 2, 3), (2, 3, 3, 2), (1, 3, 3, 5),
                         (4, 5, 5, 4), (2, 2, 2, 3)]:
        lhs = act_ambient(a, b, act_ambient(c, d, v))
        for k, val in act_ambient(c, d, act_ambient(a, b, v)).items():
            s = lhs.get(k, 0) - val
            if s:
                lhs[k] = s
            else:
                lhs.pop(k, None)
        rhs = {}
        if b == c:
            for k, val in act_ambient(a, d, v).items():
                rhs[k] = rhs.get(k, 0) + val
        if d == a:
            for k, val in act_ambient(c, b, v).items():
                rhs[k] = rhs.get(k, 0) - val
        rhs = {k: v2 for k, v2 in rhs.items() if v2}
        assert lhs == rhs


def test_weight_parsing():
    assert parse_weight("1,0,2,3") == (1, 0, 2, 3)
    assert weight_str((1, 0, 2, 3)) == "1,0,2,3"
    assert dual_weight((1, 0, 2, 3)) == (3, 2, 0, 1)
    assert eps_to_coords((2, 1, 1, 1, 1)) == (1, 0, 0, 0)
    assert eps_to_coords((1, 0, 0, 0, -1)) == (1, 0, 0, 1)


def test_project_agrees_with_coords_in_span():
    rep = build_irrep((0, 0, 1, 1))
    for i in (0, 5, rep.dim - 1):
        assert rep.project(rep.basis[i]) == {i: Q(1)}


def test_project_kills_other_isotypic_component():
    # the alternating wedge-times-dual combination generates the second
    # summand of the (0,0,1,1) multidegree space and must project to zero
    rep = build_irrep((0, 0, 1, 1))
    v = {}
    for dw, dx, s in [(((4, 5),), (3,), 1), (((3, 5),), (4,), -1),
                      (((3, 4),), (5,), 1)]:
        v[ambient_monomial(dw=dw, dx=dx)] = Q(s)
    assert rep.project(v) == {}


def test_project_splits_monomials():
    # monomial = module component + complement component; the residue is
    # killed by a second projection
    rep = build_irrep((1, 0, 0, 1))
    mono = {ambient_monomial(x=(2,), dx=(2,)): Q(1)}
    coords = rep.project(mono)
    recon = {}
    for i, c in coords.items():
        for k, val in rep.basis[i].items():
            s = recon.get(k, 0) + c * val
            if s:
                recon[k] = s
            else:
                recon.pop(k, None)
    residue = dict(mono)
    for k, val in recon.items():
        s = residue.get(k, 0) - val
        if s:
            residue[k] = s
        else:
            residue.pop(k, None)
    assert residue and rep.project(residue) == {}
