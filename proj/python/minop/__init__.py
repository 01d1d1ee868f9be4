"""Exact computations in the minimal operad on Hochschild cochains.

The extension module speaks JSON strings; these wrappers parse them so the
Python-facing API works with plain dicts and lists.
"""

import json as _json

from minop._core import (  # noqa: F401
    decode_tree as _decode_tree,
    encode_tree as _encode_tree,
)
from minop import _core


def basis_m(n):
    """Admissible-tree basis of M_n: list of {encoding, degree, tree}."""
    return _json.loads(_core.basis_m(n))


def basis_p(base, n):
    """Meta-tree basis of P over base 'M' or 'As'."""
    return _json.loads(_core.basis_p(base, n))


def differential(tree):
    """d_M of a basis tree (dict) as a list of {coeff, tree} summands."""
    return _json.loads(_core.differential(_json.dumps(tree)))


def compose(tree1, label, tree2):
    """Operadic composition at the vertex of tree1 carrying `label`."""
    return _json.loads(_core.compose(_json.dumps(tree1), label, _json.dumps(tree2)))


def d_p(meta_tree):
    """Resolution differential of a meta-tree."""
    return _json.loads(_core.d_p(_json.dumps(meta_tree)))


def act(algebra, tree, cochains):
    """Action of a tree on Hochschild cochains over the given algebra."""
    return _json.loads(
        _core.act(_json.dumps(algebra), _json.dumps(tree),
                  [_json.dumps(c) for c in cochains]))


def betti(operad, n):
    """Exact Betti numbers of 'M', 'P-M' or 'P-As' at arity n."""
    return _json.loads(_core.betti(operad, n))


def verify(suite, seed=2026, samples=200):
    """Run a named check suite and return its report."""
    return _json.loads(_core.verify(suite, seed, samples))


def is_maurer_cartan(algebra):
    """Maurer-Cartan verdict for {space, mc} given as dicts."""
    return _json.loads(_core.is_maurer_cartan(_json.dumps(algebra)))


def tail_orders(meta_tree):
    """Complementary tail orders of a generator over M."""
    return _json.loads(_core.tail_orders(_json.dumps(meta_tree)))


def poset(n, min_degree=-100, max_degree=100):
    """Meta-tree poset over M at arity n."""
    return _json.loads(_core.poset(n, min_degree, max_degree))


def encode_tree(tree):
    """Canonical string encoding of a tree dict."""
    return _encode_tree(_json.dumps(tree))


def decode_tree(encoding):
    """Tree dict from its canonical string encoding."""
    return _json.loads(_decode_tree(encoding))
