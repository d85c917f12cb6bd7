"""Exact search for singular vectors in finite Verma modules.

A singular vector is a nonzero homogeneous vector of positive degree killed
by the four simple raisings and by the whole degree +1 part.  The degree +1
conditions reduce to the single lowest weight operator x_5 d_45: the
annihilator of a raising-invariant vector is closed under bracketing with
raisings, and the degree +1 part is generated from x_5 d_45 by them.

For a fixed (degree, weight) block the conditions are one sparse linear
system; its kernel is computed exactly over the rationals.  Any vector in
the kernel is re-verified through the module action before being reported
in a certificate.
"""

import json
import os

from .scalars import Q
from .uminus import mono_height, mono_weight, enumerate_monomials
from .sl5_reps import (
    parse_weight, weight_str, is_dominant, dual_weight, eps_to_coords,
)
from .linalg import kernel_basis
from .verma import VermaModule, tensor_terms, add_tensor

TOOL_VERSION = "0.1.0"

# raising operators plus the lowest weight vector of the degree +1 part
_CONDITIONS = tuple(("e%d" % i, ("e", i, i + 1)) for i in range(1, 5)) \
    + (("x5d45", ("xd", 5, 9)),)


def _to_weight(w):
    return parse_weight(w) if isinstance(w, str) else tuple(w)


def candidate_weights(module, d, prune_height=False):
    """Dominant weights with a nonempty (degree d) weight space.

    Any singular vector sits in a finite dimensional sl5-stable degree
    component, so its weight is dominant; non-dominant blocks need not be
    searched.  prune_height only scans monomials of maximal 2-form height,
    a heuristic shrinking of the candidate list (the per-block search is
    unaffected).
    """
    monos = enumerate_monomials(d)
    if prune_height and monos:
        hmax = max(mono_height(m) for m in monos)
        monos = [m for m in monos if mono_height(m) == hmax]
    seen = set()
    for mono in monos:
        mw = mono_weight(mono)
        for rw in module.rep.eps_weights:
            c = eps_to_coords(tuple(x + y for x, y in zip(mw, rw)))
            if is_dominant(c):
                seen.add(c)
    return sorted(seen)


def singular_block(module, d, nu, entry_cap=200000):
    """Block basis and exact kernel of the singularity conditions."""
    block = module.weight_space(d, tuple(nu))
    rows = {}
    for j, pair in enumerate(block):
        v = {pair: Q(1)}
        for label, sym in _CONDITIONS:
            for key, c in module.act_sym(sym, v).items():
                rows.setdefault((label, key), {})[j] = c
    kern = kernel_basis(list(rows.values()), list(range(len(block))),
                        entry_cap=entry_cap)
    vectors = []
    for k in kern:
        out = {}
        for j, c in k.items():
            add_tensor(out, {block[j]: Q(1)}, c)
        vectors.append(out)
    return block, vectors


def make_certificate(mu, d, nu, block_dim, vectors, full_g1):
    return {
        "algebra": "E(5,10)",
        "mu": weight_str(mu),
        "degree": d,
        "weight": weight_str(nu),
        "block_dim": block_dim,
        "kernel_dim": len(vectors),
        "vectors": [tensor_terms(v) for v in vectors],
        "full_g1": bool(full_g1),
        "tool_version": TOOL_VERSION,
    }


def search_module(mu, d, nu=None, entry_cap=200000, prune_height=False,
                  full_g1=False):
    """Certificates for singular vectors of degree d in M(F(mu)).

    One certificate per weight with a nonzero kernel; candidates are all
    dominant block weights unless nu pins one down.  Every kernel vector is
    re-verified through the module action (with the 40-element degree +1
    sweep when full_g1 is set).
    """
    mu = _to_weight(mu)
    module = VermaModule(mu)
    if nu is not None:
        cands = [_to_weight(nu)]
    else:
        cands = candidate_weights(module, d, prune_height=prune_height)
    certs = []
    for cand in cands:
        block, vectors = singular_block(module, d, cand, entry_cap=entry_cap)
        if not vectors:
            continue
        for v in vectors:
            if not module.is_singular(v, full_g1=full_g1):
                raise AssertionError(
                    "kernel vector fails the action re-check at mu=%s d=%d nu=%s"
                    % (weight_str(mu), d, weight_str(cand)))
        certs.append(make_certificate(mu, d, cand, len(block), vectors,
                                      full_g1))
    return certs


def dominant_weights_up_to(coord_sum):
    """All dominant weights with coordinate sum <= coord_sum, sorted."""
    out = []
    for a in range(coord_sum + 1):
        for b in range(coord_sum + 1 - a):
            for c in range(coord_sum + 1 - a - b):
                for d in range(coord_sum + 1 - a - b - c):
                    out.append((a, b, c, d))
    return sorted(out)


def _load_checkpoint(path):
    if path and os.path.exists(path):
        with open(path) as fh:
            return json.load(fh)
    return {}


def _save_checkpoint(path, state):
    if not path:
        return
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(state, fh, sort_keys=True, indent=1)
    os.replace(tmp, path)


def sweep(mus=None, coord_sum=None, degrees=(1, 2, 3, 4), checkpoint=None,
          entry_cap=200000, prune_height=False, full_g1=False):
    """Search a grid of modules and degrees, resumable through a checkpoint.

    The checkpoint file maps "mu|degree" cells to their certificate lists;
    completed cells are reused on resume, so interrupting and restarting
    yields byte-identical results.
    """
    if mus is None:
        mus = dominant_weights_up_to(coord_sum if coord_sum is not None else 3)
    mus = [_to_weight(m) for m in mus]
    state = _load_checkpoint(checkpoint)
    certs = []
    for mu in mus:
        for d in degrees:
            key = "%s|%d" % (weight_str(mu), d)
            if key not in state:
                state[key] = search_module(
                    mu, d, entry_cap=entry_cap, prune_height=prune_height,
                    full_g1=full_g1)
                _save_checkpoint(checkpoint, state)
            certs.extend(state[key])
    return certs


def dual_pair_check(mu, d, nu, entry_cap=200000):
    """Compare a singular kernel with its dual-module counterpart.

    A morphism M(F(nu)) -> M(F(mu)) of degree d dualizes to a morphism
    M(F(mu*)) -> M(F(nu*)) of the same degree, so the kernel dimensions at
    (mu, d, nu) and (nu*, d, mu*) must agree.
    """
    mu, nu = _to_weight(mu), _to_weight(nu)
    direct = search_module(mu, d, nu=nu, entry_cap=entry_cap)
    mirrored = search_module(dual_weight(nu), d, nu=dual_weight(mu),
                             entry_cap=entry_cap)
    kd = direct[0]["kernel_dim"] if direct else 0
    kdd = mirrored[0]["kernel_dim"] if mirrored else 0
    return {
        "mu": weight_str(mu),
        "degree": d,
        "weight": weight_str(nu),
        "kernel_dim": kd,
        "dual_mu": weight_str(dual_weight(nu)),
        "dual_weight": weight_str(dual_weight(mu)),
        "dual_kernel_dim": kdd,
        "consistent": kd == kdd,
    }
