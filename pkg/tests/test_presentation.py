import itertools

import pytest

from rackenum import (
    CrossingList,
    EnumOptions,
    Presentation,
    PresentationError,
    PrimaryRelation,
    build_link_presentation,
    derive_secondary,
    enumerate_rack,
    inject_axioms,
    parse_element,
    parse_presentation,
    render_presentation,
)

from conftest import load_fixture


# --- secondary relation derivation ---------------------------------------


def test_derive_secondary_examples():
    assert derive_secondary(PrimaryRelation(1, (2, 1), 2)) == (-1, -2, 1, 2, 1, -2)
    assert derive_secondary(PrimaryRelation(2, (2, 1), 1)) == (-1, 2)
    assert derive_secondary(PrimaryRelation(1, (1,), 1)) is None


def test_derive_secondary_reduced_nonempty():
    for base in (1, 2):
        for target in (1, 2):
            for exponent in itertools.product((1, 2, -1, -2), repeat=3):
                rel = PrimaryRelation(base, exponent, target)
                word = derive_secondary(rel)
                if word is not None:
                    assert word
                    assert all(word[i] != -word[i + 1] for i in range(len(word) - 1))


# --- axiom injection ------------------------------------------------------


def relation_set(rels):
    return [(r.base, r.exponent, r.target) for r in rels]


def test_inject_quandle_only():
    p = Presentation(("a", "b"), quandle=True)
    assert relation_set(inject_axioms(p)) == [(1, (1,), 1), (2, (2,), 2)]


def test_inject_nquandle_two():
    p = Presentation(("a", "b"), nquandle=2)
    assert relation_set(inject_axioms(p)) == [
        (1, (1,), 1), (2, (2,), 2), (1, (2, 2), 1), (2, (1, 1), 2),
    ]


def test_inject_single_generator_nquandle():
    p = Presentation(("a",), nquandle=3)
    assert relation_set(inject_axioms(p)) == [(1, (1,), 1)]


def test_inject_counts():
    for g in (1, 2, 3, 4):
        names = tuple(f"g{k}" for k in range(g))
        p = Presentation(names, nquandle=2)
        assert len(inject_axioms(p)) == g + g * (g - 1)


def test_inject_rejects_small_n():
    with pytest.raises(PresentationError):
        Presentation(("a",), nquandle=1)


# --- parser / renderer -----------------------------------------------------


def test_parse_worked_example_text():
    text = "gens a b\nrel a^[b a] = b\nrel b^[b a] = a\nrel a^[b b] = a\nrel b^[a a] = b"
    p = parse_presentation(text)
    assert p.generator_names == ("a", "b")
    assert relation_set(p.relations) == [
        (1, (2, 1), 2), (2, (2, 1), 1), (1, (2, 2), 1), (2, (1, 1), 2),
    ]
    assert not p.quandle and p.nquandle is None


def test_parse_single_generator():
    p = parse_presentation("gens a\n")
    assert p.generator_names == ("a",)
    assert p.relations == ()


def test_parse_undeclared_generator_first_line():
    with pytest.raises(PresentationError):
        parse_presentation("rel a^[b] = b")


def test_parse_unknown_generator_reports_position():
    with pytest.raises(PresentationError) as exc:
        parse_presentation("gens a b\nrel a^[c] = b")
    assert exc.value.line == 2
    assert exc.value.column == 8


def test_parse_malformed_exponent():
    with pytest.raises(PresentationError) as exc:
        parse_presentation("gens a b\nrel a^[b = b")
    assert exc.value.line == 2


def test_parse_flags_and_comments():
    p = parse_presentation("# demo\ngens a b\nnquandle 2\nrel a^[b] = b\n")
    assert p.nquandle == 2 and not p.quandle
    q = parse_presentation("gens a b\nquandle\n")
    assert q.quandle and q.nquandle is None


def test_parse_rejects_bad_nquandle():
    with pytest.raises(PresentationError):
        parse_presentation("gens a b\nnquandle 1\n")
    with pytest.raises(PresentationError):
        parse_presentation("gens a b\nnquandle x\n")


def test_parse_rejects_duplicate_gens():
    with pytest.raises(PresentationError):
        parse_presentation("gens a b\ngens c d\n")


def test_empty_exponent_parses():
    p = parse_presentation("gens a b\nrel a^[] = b\n")
    assert p.relations == (PrimaryRelation(1, (), 2),)


def test_round_trip_all_fixtures():
    for name in ("worked_example", "ward_stall", "trefoil_4quandle",
                 "torus_link_2quandle", "three_gen_quandle", "link_2quandle"):
        p = load_fixture(name)
        assert parse_presentation(render_presentation(p)) == p


def test_round_trip_with_flags():
    p = Presentation(("a", "b"), (PrimaryRelation(1, (2, -1), 2),), quandle=True, nquandle=3)
    assert parse_presentation(render_presentation(p)) == p


def test_parse_element():
    p = Presentation(("a", "b"))
    assert parse_element("a", p) == (1, ())
    assert parse_element("a^[b b]", p) == (1, (2, 2))
    assert parse_element("b^[~a b]", p) == (2, (-1, 2))
    with pytest.raises(PresentationError):
        parse_element("c", p)


# --- link presentations -----------------------------------------------------


def test_link_single_arc():
    p = build_link_presentation(CrossingList(arcs=1), n=2)
    assert p.generator_names == ("x1",)
    assert p.relations == ()
    assert relation_set(inject_axioms(p)) == [(1, (1,), 1)]


TREFOIL = CrossingList(arcs=3, crossings=((1, 2, 3), (2, 3, 1), (3, 1, 2)))


def test_link_out_of_range_arc():
    with pytest.raises(PresentationError):
        CrossingList(arcs=3, crossings=((1, 2, 5),))
    with pytest.raises(PresentationError):
        build_link_presentation(TREFOIL, n=1)


def _involutions_fixing(point, size):
    """All involutions of range(size) fixing the given point."""
    rest = [x for x in range(size) if x != point]
    out = []

    def build(remaining, perm):
        if not remaining:
            out.append(tuple(perm))
            return
        x = remaining[0]
        build(remaining[1:], perm)  # x fixed
        for y in remaining[1:]:
            swapped = dict(perm)
            swapped[x], swapped[y] = y, x
            build([z for z in remaining[1:] if z != y], swapped)

    build(rest, {x: x for x in range(size)})
    return [[p[x] for x in range(size)] for p in out]


def _largest_involutory_quandle(crossings, gens, max_size):
    """Brute force: largest involutory quandle on <= max_size elements whose
    generator images satisfy the crossing relations and generate it."""
    best = 0
    for size in range(1, max_size + 1):
        column_choices = [_involutions_fixing(y, size) for y in range(size)]
        for cols in itertools.product(*column_choices):
            op = [[cols[y][x] for y in range(size)] for x in range(size)]
            if not all(op[op[x][y]][z] == op[op[x][z]][op[y][z]]
                       for x in range(size) for y in range(size) for z in range(size)):
                continue
            for assign in itertools.product(range(size), repeat=gens):
                if any(op[assign[j - 1]][assign[i - 1]] != assign[k - 1]
                       for i, j, k in crossings):
                    continue
                closure = set(assign)
                grew = True
                while grew:
                    grew = False
                    for x in list(closure):
                        for y in list(closure):
                            if op[x][y] not in closure:
                                closure.add(op[x][y])
                                grew = True
                if len(closure) == size:
                    best = max(best, size)
                    break
    return best


def test_trefoil_involutory_quandle_matches_brute_force():
    oracle = _largest_involutory_quandle(TREFOIL.crossings, gens=3, max_size=4)
    assert oracle == 3
    p = build_link_presentation(TREFOIL, n=2)
    result = enumerate_rack(p, EnumOptions(run_limit=200))
    assert result.completed
    assert result.metrics.order == oracle
