"""Two-sided noncommutative Groebner bases in free algebras on named letters.

Completion uses the degree-lexicographic order with a fixed letter order.
Pure lexicographic comparison is not a monomial well-order for two-sided
rewriting, so deglex is used instead; every ideal handled here is
homogeneous, which makes quotient dimensions and ideal equality
order-independent.  The order actually used is recorded on the basis.
"""

from __future__ import annotations

from .fields import FieldSpec

Letter = str
NCWord = tuple[Letter, ...]

ORDER_NOTE = "deglex (degree, then leftmost-letter comparison); pure lex is not a completion order"


class NCPoly:
    """An element of the free associative algebra on named letters."""

    def __init__(self, terms: dict[NCWord, object]):
        self.terms = terms

    @staticmethod
    def zero() -> "NCPoly":
        return NCPoly({})

    @staticmethod
    def of(f: FieldSpec, items) -> "NCPoly":
        terms: dict[NCWord, object] = {}
        pairs = items.items() if isinstance(items, dict) else items
        for word, coeff in pairs:
            word = tuple(word)
            c = f.add(terms.get(word, f.zero), f(coeff))
            if f.is_zero(c):
                terms.pop(word, None)
            else:
                terms[word] = c
        return NCPoly(terms)

    @staticmethod
    def letter(f: FieldSpec, name: Letter) -> "NCPoly":
        return NCPoly({(name,): f.one})

    @staticmethod
    def unit(f: FieldSpec) -> "NCPoly":
        return NCPoly({(): f.one})

    def is_zero(self) -> bool:
        return not self.terms

    def add(self, other: "NCPoly", f: FieldSpec) -> "NCPoly":
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            c = f.add(terms.get(word, f.zero), coeff)
            if f.is_zero(c):
                terms.pop(word, None)
            else:
                terms[word] = c
        return NCPoly(terms)

    def scale(self, coeff, f: FieldSpec) -> "NCPoly":
        coeff = f(coeff)
        if f.is_zero(coeff):
            return NCPoly.zero()
        return NCPoly({w: f.mul(coeff, c) for w, c in self.terms.items()})

    def sub(self, other: "NCPoly", f: FieldSpec) -> "NCPoly":
        return self.add(other.scale(f.neg(f.one), f), f)

    def mul(self, other: "NCPoly", f: FieldSpec) -> "NCPoly":
        terms: dict[NCWord, object] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                c = f.add(terms.get(word, f.zero), f.mul(c1, c2))
                if f.is_zero(c):
                    terms.pop(word, None)
                else:
                    terms[word] = c
        return NCPoly(terms)

    def pow(self, k: int, f: FieldSpec) -> "NCPoly":
        result = NCPoly.unit(f)
        for _ in range(k):
            result = result.mul(self, f)
        return result

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(len(w) for w in self.terms)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self.terms}) <= 1

    def letters(self) -> set[Letter]:
        return {letter for word in self.terms for letter in word}

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for word in sorted(self.terms, key=lambda w: (-len(w), w)):
            mono = "*".join(word) if word else "1"
            bits.append(f"({self.terms[word]})*{mono}")
        return " + ".join(bits)


class DegLex:
    """Degree-lexicographic word order for a fixed letter sequence."""

    def __init__(self, letters: tuple[Letter, ...]):
        if len(set(letters)) != len(letters):
            raise ValueError("duplicate letters")
        self.letters = tuple(letters)
        self.index = {letter: i for i, letter in enumerate(letters)}

    def key(self, word: NCWord):
        return (len(word), tuple(self.index[letter] for letter in word))

    def leading(self, p: NCPoly) -> NCWord:
        if p.is_zero():
            raise ValueError("zero polynomial has no leading word")
        return max(p.terms, key=self.key)

    def describe(self) -> str:
        return "deglex(" + " < ".join(self.letters) + ")"


def _find_subword(word: NCWord, pattern: NCWord) -> int | None:
    """Leftmost start index of pattern inside word, or None."""
    n, m = len(word), len(pattern)
    for i in range(n - m + 1):
        if word[i : i + m] == pattern:
            return i
    return None


def normal_form(p: NCPoly, basis: list[NCPoly], order: DegLex, f: FieldSpec) -> NCPoly:
    """Fully reduce p by the basis: rewrite every occurrence of a leading word."""
    leads = [(order.leading(g), g) for g in basis if not g.is_zero()]
    result: dict[NCWord, object] = {}
    work = dict(p.terms)
    while work:
        word = max(work, key=order.key)
        coeff = work.pop(word)
        hit = None
        for lead, g in leads:
            pos = _find_subword(word, lead)
            if pos is not None:
                hit = (pos, lead, g)
                break
        if hit is None:
            c = f.add(result.get(word, f.zero), coeff)
            if f.is_zero(c):
                result.pop(word, None)
            else:
                result[word] = c
            continue
        pos, lead, g = hit
        left, right = word[:pos], word[pos + len(lead) :]
        # word = left*lead*right, so subtract coeff/lc * left*g*right.
        factor = f.div(coeff, g.terms[lead])
        for gw, gc in g.terms.items():
            if gw == lead:
                continue
            new_word = left + gw + right
            c = f.sub(work.get(new_word, f.zero), f.mul(factor, gc))
            if f.is_zero(c):
                work.pop(new_word, None)
            else:
                work[new_word] = c
    return NCPoly(result)


def _monic(p: NCPoly, order: DegLex, f: FieldSpec) -> NCPoly:
    lead = order.leading(p)
    return p.scale(f.inv(p.terms[lead]), f)


def _overlap_words(u: NCWord, v: NCWord):
    """Yield (a, b) with u+b == a+v a proper overlap word of u then v."""
    for k in range(1, min(len(u), len(v))):
        if u[len(u) - k :] == v[:k]:
            yield u[: len(u) - k], v[k:]


class GroebnerBasis:
    """Reduced two-sided basis, complete for all overlaps up to degree_bound."""

    def __init__(self, generators: list[NCPoly], order: DegLex, degree_bound: int):
        self.generators = generators
        self.order = order
        self.degree_bound = degree_bound

    @property
    def letters(self) -> tuple[Letter, ...]:
        return self.order.letters

    def leading_words(self) -> list[NCWord]:
        return [self.order.leading(g) for g in self.generators]

    def normal_form(self, p: NCPoly, f: FieldSpec) -> NCPoly:
        return normal_form(p, self.generators, self.order, f)

    def __repr__(self) -> str:
        return (
            f"GroebnerBasis({len(self.generators)} elements, "
            f"{self.order.describe()}, bound {self.degree_bound})"
        )


def _interreduce(basis: list[NCPoly], order: DegLex, f: FieldSpec) -> list[NCPoly]:
    current = [g for g in basis if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(current)):
            rest = current[:i] + current[i + 1 :]
            reduced = normal_form(current[i], rest, order, f)
            if reduced.terms != current[i].terms:
                changed = True
                if reduced.is_zero():
                    current = rest
                else:
                    current = rest + [_monic(reduced, order, f)]
                break
    return sorted(
        (_monic(g, order, f) for g in current),
        key=lambda g: order.key(order.leading(g)),
    )


def groebner(
    gens: list[NCPoly],
    f: FieldSpec,
    bound: int,
    letters: tuple[Letter, ...] | None = None,
) -> GroebnerBasis:
    """Overlap completion of a two-sided ideal, capped at the degree bound."""
    if letters is None:
        seen: set[Letter] = set()
        for g in gens:
            seen |= g.letters()
        letters = tuple(sorted(seen))
    order = DegLex(letters)
    if any(not g.is_zero() and g.degree() > bound for g in gens):
        raise ValueError("bound is smaller than a generator degree")

    basis: list[NCPoly] = []
    for g in gens:
        reduced = normal_form(g, basis, order, f)
        if not reduced.is_zero():
            basis.append(_monic(reduced, order, f))
            basis = _interreduce(basis, order, f)

    # Pairs are regenerated from scratch whenever the basis changes; the
    # inter-reduction step can replace elements, so indices are not stable.
    done: set[tuple[NCWord, NCWord, NCWord]] = set()
    while True:
        new_element = None
        for g1 in basis:
            u = order.leading(g1)
            for g2 in basis:
                v = order.leading(g2)
                for a, b in _overlap_words(u, v):
                    if len(u) + len(b) > bound:
                        continue
                    tag = (u, v, a + v)
                    if tag in done:
                        continue
                    done.add(tag)
                    s = g1.mul(NCPoly({b: f.one}), f).sub(
                        NCPoly({a: f.one}).mul(g2, f), f
                    )
                    remainder = normal_form(s, basis, order, f)
                    if not remainder.is_zero():
                        new_element = _monic(remainder, order, f)
                        break
                if new_element:
                    break
            if new_element:
                break
        if new_element is None:
            break
        basis.append(new_element)
        basis = _interreduce(basis, order, f)
        done.clear()

    return GroebnerBasis(_interreduce(basis, order, f), order, bound)


class QuotientDims:
    """Per-degree dimensions of a free algebra modulo a completed ideal."""

    def __init__(self, dims: dict[int, int], verdict: str):
        self.dims = dims
        self.verdict = verdict

    @property
    def total(self) -> int | None:
        if self.verdict != "FINITE":
            return None
        return sum(self.dims.values())

    def __repr__(self) -> str:
        return f"QuotientDims({self.dims}, {self.verdict})"


def quotient_dims(gb: GroebnerBasis, degree_max: int) -> QuotientDims:
    """Count normal words per degree; FINITE once a whole degree level dies."""
    leads = gb.leading_words()
    level: list[NCWord] = [()]
    dims = {0: 1 if () not in leads else 0}
    finite = dims[0] == 0
    for d in range(1, degree_max + 1):
        next_level = []
        for word in level:
            for letter in gb.letters:
                grown = word + (letter,)
                # word itself was normal, so only suffixes can become reducible
                if any(grown[len(grown) - len(lm) :] == lm for lm in leads if lm):
                    continue
                next_level.append(grown)
        dims[d] = len(next_level)
        level = next_level
        if not next_level:
            finite = True
            for rest in range(d + 1, degree_max + 1):
                dims[rest] = 0
            break
    return QuotientDims(dims, "FINITE" if finite else "UNKNOWN")


def normal_words(gb: GroebnerBasis, degree_max: int) -> list[NCWord]:
    """All normal words of degree at most degree_max, in deglex order."""
    leads = gb.leading_words()
    words: list[NCWord] = []
    level: list[NCWord] = [()]
    if () not in leads:
        words.append(())
    for _ in range(degree_max):
        next_level = []
        for word in level:
            for letter in gb.letters:
                grown = word + (letter,)
                if any(grown[len(grown) - len(lm) :] == lm for lm in leads if lm):
                    continue
                next_level.append(grown)
        words.extend(sorted(next_level, key=gb.order.key))
        level = next_level
        if not level:
            break
    return words


def ideal_equal(
    gens_a: list[NCPoly],
    gens_b: list[NCPoly],
    f: FieldSpec,
    bound: int,
) -> bool:
    """Compare reduced bases through the bound (exact for homogeneous ideals)."""
    seen: set[Letter] = set()
    for g in gens_a + gens_b:
        seen |= g.letters()
    letters = tuple(sorted(seen))
    gb_a = groebner(gens_a, f, bound, letters)
    gb_b = groebner(gens_b, f, bound, letters)
    terms_a = sorted(
        (sorted(g.terms) for g in gb_a.generators), key=lambda t: (len(t), t)
    )
    terms_b = sorted(
        (sorted(g.terms) for g in gb_b.generators), key=lambda t: (len(t), t)
    )
    if terms_a != terms_b:
        return False
    return all(
        ga.sub(gb, f).is_zero()
        for ga, gb in zip(gb_a.generators, gb_b.generators)
    )


def corner_ideals(n: int, f: FieldSpec) -> tuple[list[NCPoly], list[NCPoly]]:
    """Generators of (x^2, y^2, (x+y+xy)^(n-2)) and of (x^2, y^2, (x+y)^(n-2)).

    The first quotient is the corner of the degree-zero cohomology of the
    D-shaped contact algebra at its trivalent vertex; the second is the
    claimed simplification.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    x = NCPoly.letter(f, "x")
    y = NCPoly.letter(f, "y")
    xx = x.mul(x, f)
    yy = y.mul(y, f)
    long_gen = x.add(y, f).add(x.mul(y, f), f).pow(n - 2, f)
    short_gen = x.add(y, f).pow(n - 2, f)
    return [xx, yy, long_gen], [xx, yy, short_gen]


def alternating_word(first: Letter, second: Letter, length: int) -> NCWord:
    """The word first,second,first,... of the requested length."""
    return tuple(first if i % 2 == 0 else second for i in range(length))
