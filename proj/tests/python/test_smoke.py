"""Smoke tests for the Python bindings.

Run with PYTHONPATH pointing at a directory containing the built `minop`
package (the CMake build places one under <build>/python).
"""

import minop


def test_basis_sizes():
    assert len(minop.basis_m(1)) == 1
    assert len(minop.basis_m(2)) == 4
    assert len(minop.basis_m(3)) == 48
    assert len(minop.basis_p("As", 3)) == 30
    assert len(minop.basis_p("M", 2)) == 4


def test_tree_encode_roundtrip():
    for entry in minop.basis_m(2):
        tree = entry["tree"]
        assert minop.encode_tree(tree) == entry["encoding"]
        assert minop.decode_tree(entry["encoding"]) == tree


def test_differential_frozen_example():
    nested = minop.decode_tree("1(2)")
    d = minop.differential(nested)
    got = {minop.encode_tree(s["tree"]): s["coeff"] for s in d}
    assert got == {"*(1,2)": "-1", "*(2,1)": "1"}


def test_compose_summand_count():
    t1 = minop.decode_tree("1(2)")
    # *(3,4) has five angles and vertex 1 has one child: five insertions.
    t2 = minop.decode_tree("*(3,4)")
    assert len(minop.compose(t1, 1, t2)) == 5
    assert len(minop.compose(t1, 2, t2)) == 1


def test_betti_m3():
    result = minop.betti("M", 3)
    assert result["betti"] == {"0": 1, "-1": 3, "-2": 2}
    assert result["euler_characteristic"] == 0


def test_betti_resolution():
    result = minop.betti("P-As", 3)
    nonzero = {q: b for q, b in result["betti"].items() if b != 0}
    assert nonzero == {"0": 6}


def test_maurer_cartan():
    algebra = {
        "space": {"basis": [{"name": "e0", "degree": 0}, {"name": "e1", "degree": -1}]},
        "mc": {
            "total_degree": 2,
            "cap": 4,
            "entries": [
                {"arity": 2, "inputs": ["e0", "e0"], "output": "e0", "coeff": "1"},
                {"arity": 2, "inputs": ["e0", "e1"], "output": "e1", "coeff": "1"},
                {"arity": 2, "inputs": ["e1", "e0"], "output": "e1", "coeff": "1"},
            ],
        },
    }
    verdict = minop.is_maurer_cartan(algebra)
    assert verdict["holds"]

    # A three-dimensional product with one entry dropped is genuinely
    # non-associative: (e0 * x) * x = x^2 while e0 * (x * x) = 0.
    basis3 = [{"name": "e0", "degree": 0}, {"name": "e1", "degree": -1},
              {"name": "e2", "degree": -2}]
    entries = []
    for i in range(3):
        for j in range(3):
            if i + j < 3 and not (i == 0 and j == 2):
                entries.append({"arity": 2, "inputs": [f"e{i}", f"e{j}"],
                                "output": f"e{i + j}", "coeff": "1"})
    broken = {
        "space": {"basis": basis3},
        "mc": {"total_degree": 2, "cap": 4, "entries": entries},
    }
    assert not minop.is_maurer_cartan(broken)["holds"]


def test_act_cup_product():
    algebra = {
        "space": {"basis": [{"name": "e0", "degree": 0}, {"name": "e1", "degree": -1}]},
        "mc": {
            "total_degree": 2,
            "cap": 4,
            "entries": [
                {"arity": 2, "inputs": ["e0", "e0"], "output": "e0", "coeff": "1"},
                {"arity": 2, "inputs": ["e0", "e1"], "output": "e1", "coeff": "1"},
                {"arity": 2, "inputs": ["e1", "e0"], "output": "e1", "coeff": "1"},
            ],
        },
    }
    unit = {"total_degree": 0, "cap": 4,
            "entries": [{"arity": 0, "inputs": [], "output": "e0", "coeff": "1"}]}
    ident = {"total_degree": 1, "cap": 4,
             "entries": [{"arity": 1, "inputs": ["e0"], "output": "e0", "coeff": "1"}]}
    cup = minop.act(algebra, minop.decode_tree("*(1,2)"), [unit, ident])
    assert cup["total_degree"] == 1
    assert any(e["coeff"] != "0" for e in cup["entries"])


def test_verify_orders_suite():
    report = minop.verify("orders")
    assert report["pass"]
    assert all(c["pass"] for c in report["checks"])


def test_tail_orders_on_a_generator():
    gens = [b for b in minop.basis_p("M", 2)
            if all_finite(b["meta_tree"])]
    assert len(gens) == 4
    seen = set()
    for g in gens:
        orders = minop.tail_orders(g["meta_tree"])
        assert orders["minimal"] == orders["plus"][0]
        seen.add((tuple(map(tuple, orders["horizontal"])),
                  tuple(map(tuple, orders["vertical"]))))
    # The four generators realize four distinct order pairs.
    assert len(seen) == 4


def all_finite(meta_tree):
    if "tail" in meta_tree:
        return True
    for child in meta_tree["children"]:
        if child.get("mark") == "infinite" or not all_finite(child):
            return False
    return True


def test_poset():
    p = minop.poset(2)
    assert len(p["elements"]) == 4
    assert len(p["covers"]) == 4
