"""Brute-force rewriting oracle for the free commutative tri-algebra.

Words are fully parenthesized binary trees over the two products.  The six
defining identities, applied at any position in either direction, generate a
finite congruence class for each word (every identity preserves the leaf
multiset).  The oracle enumerates that closure and checks the closed-form
products of `tricochain.freemodel` against it without using them to decide
equivalence.
"""

from __future__ import annotations

from .freemodel import ComTriMonomial, bullet, generator, star

STAR = "*"
BULLET = "."

Word = tuple


def gen_word(i: int) -> Word:
    return ("g", i)


def star_word(left: Word, right: Word) -> Word:
    return (STAR, left, right)


def bullet_word(left: Word, right: Word) -> Word:
    return (BULLET, left, right)


def word_degree(t: Word) -> int:
    if t[0] == "g":
        return 1
    return word_degree(t[1]) + word_degree(t[2])


def render_word(t: Word) -> str:
    if t[0] == "g":
        return f"x{t[1]}"
    return f"({render_word(t[1])}{t[0]}{render_word(t[2])})"


def _root_rewrites(t: Word):
    """Words reachable from t by one identity applied at the root."""
    op, left, right = t
    if op == STAR:
        if left[0] == STAR:
            # (x*y)*z -> x*(y*z)
            yield (STAR, left[1], (STAR, left[2], right))
        if right[0] == STAR:
            # x*(y*z) -> (x*y)*z
            yield (STAR, (STAR, left, right[1]), right[2])
            # x*(y*z) -> x*(z*y)
            yield (STAR, left, (STAR, right[2], right[1]))
            # x*(y*z) -> x*(y.z)
            yield (STAR, left, (BULLET, right[1], right[2]))
        if right[0] == BULLET:
            # x*(y.z) -> x*(y*z)
            yield (STAR, left, (STAR, right[1], right[2]))
        if left[0] == BULLET:
            # (x.y)*z -> x.(y*z)
            yield (BULLET, left[1], (STAR, left[2], right))
    else:
        # x.y -> y.x
        yield (BULLET, right, left)
        if left[0] == BULLET:
            # (x.y).z -> x.(y.z)
            yield (BULLET, left[1], (BULLET, left[2], right))
        if right[0] == BULLET:
            # x.(y.z) -> (x.y).z
            yield (BULLET, (BULLET, left, right[1]), right[2])
        if right[0] == STAR:
            # x.(y*z) -> (x.y)*z
            yield (STAR, (BULLET, left, right[1]), right[2])


def neighbors(t: Word):
    """Words one identity application away from t, at any position."""
    if t[0] == "g":
        return
    yield from _root_rewrites(t)
    op, left, right = t
    for l2 in neighbors(left):
        yield (op, l2, right)
    for r2 in neighbors(right):
        yield (op, left, r2)


def equivalence_class(t: Word, limit: int | None = None) -> frozenset:
    """Closure of t under the identities (breadth-first)."""
    seen = {t}
    frontier = [t]
    while frontier:
        nxt = []
        for w in frontier:
            for w2 in neighbors(w):
                if w2 not in seen:
                    seen.add(w2)
                    nxt.append(w2)
        if limit is not None and len(seen) > limit:
            raise RuntimeError(f"congruence class of {render_word(t)} exceeded {limit} words")
        frontier = nxt
    return frozenset(seen)


def words_equivalent(s: Word, t: Word) -> bool:
    """Whether s and t are congruent modulo the identities (exhaustive)."""
    if word_degree(s) != word_degree(t):
        return False
    return t in equivalence_class(s)


def eval_word(t: Word) -> ComTriMonomial:
    """Closed-form evaluation of a word.  This is the path under test."""
    if t[0] == "g":
        return generator(t[1])
    lhs, rhs = eval_word(t[1]), eval_word(t[2])
    return star(lhs, rhs) if t[0] == STAR else bullet(lhs, rhs)


def monomial_word(mono: ComTriMonomial) -> Word:
    """The defining word of a normal form: left-nested block, left-nested tail."""
    block: Word = gen_word(mono.m[0])
    for i in mono.m[1:]:
        block = bullet_word(block, gen_word(i))
    if not mono.n:
        return block
    tail: Word = gen_word(mono.n[0])
    for i in mono.n[1:]:
        tail = star_word(tail, gen_word(i))
    return star_word(block, tail)


def _parse_chain(node: Word, op: str) -> list[int] | None:
    """Leaf indices of a left-nested op-chain of generators, else None."""
    out: list[int] = []
    while node[0] == op:
        if node[2][0] != "g":
            return None
        out.append(node[2][1])
        node = node[1]
    if node[0] != "g":
        return None
    out.append(node[1])
    return out


def as_normal_form(t: Word) -> ComTriMonomial | None:
    """The monomial whose defining word t is (up to chain order), else None."""
    if t[0] == "g":
        return ComTriMonomial((t[1],))
    if t[0] == BULLET:
        block = _parse_chain(t, BULLET)
        return ComTriMonomial(tuple(block)) if block else None
    tail = _parse_chain(t[2], STAR)
    if tail is None:
        return None
    head = t[1]
    if head[0] == "g":
        return ComTriMonomial((head[1],), tuple(tail))
    if head[0] == BULLET:
        block = _parse_chain(head, BULLET)
        return ComTriMonomial(tuple(block), tuple(tail)) if block else None
    return None


def words_up_to_degree(max_degree: int, num_gens: int) -> list[list[Word]]:
    """words[d] = every fully parenthesized word with d leaves over x1..x_num_gens."""
    by_deg: list[list[Word]] = [[], [gen_word(i) for i in range(1, num_gens + 1)]]
    for d in range(2, max_degree + 1):
        words: list[Word] = []
        for lsize in range(1, d):
            for lw in by_deg[lsize]:
                for rw in by_deg[d - lsize]:
                    words.append(star_word(lw, rw))
                    words.append(bullet_word(lw, rw))
        by_deg.append(words)
    return by_deg


def confirm_closed_forms(max_degree: int = 4, num_gens: int = 4) -> int:
    """Check the closed forms against the congruence on every small word.

    For each word w the congruence class of w must (a) evaluate to a single
    monomial under the closed forms, (b) contain the defining word of that
    monomial, and (c) contain defining words of no other monomial.  Returns
    the number of words covered; raises AssertionError on any discrepancy.
    """
    total = 0
    seen: set[Word] = set()
    by_deg = words_up_to_degree(max_degree, num_gens)
    for d in range(1, max_degree + 1):
        for w in by_deg[d]:
            total += 1
            if w in seen:
                continue
            cls = equivalence_class(w)
            seen |= cls
            values = {eval_word(v) for v in cls}
            if len(values) != 1:
                raise AssertionError(f"closed forms disagree on the class of {render_word(w)}")
            predicted = values.pop()
            if monomial_word(predicted) not in cls:
                raise AssertionError(f"normal-form word of {predicted!r} missing from the class of {render_word(w)}")
            parsed = {as_normal_form(v) for v in cls} - {None}
            if parsed != {predicted}:
                raise AssertionError(f"class of {render_word(w)} meets normal forms {parsed}, expected {predicted!r}")
    return total


def expansion_terms() -> tuple[dict[int, Word], dict[int, Word]]:
    """A-parts of the nine-term expansions of a left/right triple product."""
    g1, g2, g3 = gen_word(1), gen_word(2), gen_word(3)
    s, b = star_word, bullet_word
    left = {
        1: s(s(g1, g2), g3), 2: s(g3, s(g1, g2)), 3: b(s(g1, g2), g3),
        4: s(s(g2, g1), g3), 5: s(g3, s(g2, g1)), 6: b(s(g2, g1), g3),
        7: s(b(g1, g2), g3), 8: s(g3, b(g1, g2)), 9: b(b(g1, g2), g3),
    }
    right = {
        1: s(g1, s(g2, g3)), 2: s(s(g2, g3), g1), 3: b(g1, s(g2, g3)),
        4: s(g1, s(g3, g2)), 5: s(s(g3, g2), g1), 6: b(g1, s(g3, g2)),
        7: s(g1, b(g2, g3)), 8: s(b(g2, g3), g1), 9: b(g1, b(g2, g3)),
    }
    return left, right


# Pairs (i, j) with L_i = R_j needed so the two expansions cancel groupwise.
# Each of the nine terms on either side occurs in at least one pair.
MATCHING_PAIRS = (
    (1, 1), (1, 4), (1, 7),
    (2, 5), (5, 5), (8, 5),
    (4, 2), (6, 8), (3, 6), (7, 3), (9, 9),
)
