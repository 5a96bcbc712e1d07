"""One-dimensional substitutions: language, collaring, border forcing.

This module is the 1D counterpart of the pentagon machinery.  A substitution
on a finite alphabet is collared by recording each letter together with its
two neighbours, the collared substitution is read off from the images of
3-letter windows, and border forcing asks for the smallest power k such that
the k-th collared image word determines the collared letters flanking it.

The Anderson-Putnam complex of a 1D substitution is a graph: one edge per
collared letter, vertices obtained by gluing endpoint germs along legal
transitions.  `ap_graph_1d` emits it in the same `CWComplex` / `ChainMaps`
containers the pentagon complex uses, so the cohomology machinery applies
unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .apcomplex import ChainMaps, CWComplex, check_commutation, connectivity
from .core import TilespaceError
from .matrix import matmul


class SubstitutionError(TilespaceError):
    """Malformed rules, or a degenerate substitution with no language."""


@dataclass(frozen=True)
class SymbolicSubstitution:
    """A substitution rule set on a finite alphabet of single characters."""

    rules: dict

    def __post_init__(self):
        if not self.rules:
            raise SubstitutionError("empty rule set")
        for sym, word in self.rules.items():
            if not (isinstance(sym, str) and len(sym) == 1):
                raise SubstitutionError(
                    f"symbol {sym!r} is not a single character")
            if not (isinstance(word, str) and word):
                raise SubstitutionError(
                    f"image of {sym!r} must be a nonempty string")
        alpha = frozenset(self.rules)
        for sym, word in self.rules.items():
            stray = sorted(set(word) - alpha)
            if stray:
                raise SubstitutionError(
                    f"image of {sym!r} uses letters outside the alphabet: "
                    + "".join(stray))
        object.__setattr__(self, "rules", dict(self.rules))

    @property
    def alphabet(self) -> tuple:
        return tuple(sorted(self.rules))

    def apply(self, word: str, k: int = 1) -> str:
        """Image of `word` under the k-th power of the substitution."""
        if k < 0:
            raise SubstitutionError("power must be nonnegative")
        for _ in range(k):
            word = "".join(self.rules[ch] for ch in word)
        return word

    def power(self, k: int) -> "SymbolicSubstitution":
        if k < 1:
            raise SubstitutionError("power must be positive")
        return SymbolicSubstitution(
            {x: self.apply(x, k) for x in self.alphabet})

    def incidence_matrix(self) -> tuple:
        """Row x counts the letters occurring in the image of x."""
        alpha = self.alphabet
        return tuple(tuple(self.rules[x].count(y) for y in alpha)
                     for x in alpha)


def fibonacci() -> SymbolicSubstitution:
    """a -> b, b -> ab."""
    return SymbolicSubstitution({"a": "b", "b": "ab"})


def thue_morse() -> SymbolicSubstitution:
    """a -> ab, b -> ba."""
    return SymbolicSubstitution({"a": "ab", "b": "ba"})


def parse_rules_text(text: str) -> SymbolicSubstitution:
    """Parse `symbol -> word` lines; blank lines and # comments are skipped."""
    rules = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        sym, arrow, word = line.partition("->")
        if not arrow:
            raise SubstitutionError(f"line {ln}: expected 'symbol -> word'")
        sym, word = sym.strip(), word.strip()
        if len(sym) != 1:
            raise SubstitutionError(
                f"line {ln}: symbol must be a single character, got {sym!r}")
        if sym in rules:
            raise SubstitutionError(f"line {ln}: duplicate rule for {sym!r}")
        rules[sym] = word
    return SymbolicSubstitution(rules)


def is_primitive(s: SymbolicSubstitution) -> bool:
    """True when some power of the incidence matrix is entrywise positive.

    Positivity is decided on the boolean shadow; the Wielandt bound
    (k-1)^2 + 1 caps the exponent.
    """
    m = s.incidence_matrix()
    k = len(m)
    b = tuple(tuple(1 if v else 0 for v in row) for row in m)
    p = b
    for _ in range((k - 1) ** 2 + 1):
        if all(all(row) for row in p):
            return True
        p = tuple(tuple(1 if v else 0 for v in row) for row in matmul(p, b))
    return False


def factors(word: str, n: int) -> frozenset:
    """All length-n factors of `word`."""
    return frozenset(word[i:i + n] for i in range(len(word) - n + 1))


def legal_words(s: SymbolicSubstitution, n: int) -> frozenset:
    """Length-n words legal in the substitution language.

    Seeds with the n-factors of iterated letter images until every image is
    at least n long, then closes under taking n-factors of images.  If the
    image lengths cycle below n the substitution has no length-n words and a
    diagnostic is raised.
    """
    if n < 1:
        raise SubstitutionError("word length must be positive")
    seed = set()
    words = {x: x for x in s.alphabet}
    seen_lengths = set()
    while True:
        words = {x: s.apply(w) for x, w in words.items()}
        for w in words.values():
            seed |= factors(w, n)
        lengths = tuple(len(words[x]) for x in s.alphabet)
        if min(lengths) >= n:
            break
        if lengths in seen_lengths:
            raise SubstitutionError(
                f"degenerate substitution: letter images cycle at lengths "
                f"{dict(zip(s.alphabet, lengths))} and never reach {n}")
        seen_lengths.add(lengths)
    current = frozenset(seed)
    while True:
        grown = set(current)
        for u in current:
            grown |= factors(s.apply(u), n)
        if len(grown) == len(current):
            return current
        current = frozenset(grown)


@dataclass(frozen=True, order=True)
class CollaredLetter:
    """A letter together with its two neighbours, written (left)core(right)."""

    left: str
    core: str
    right: str

    def __str__(self):
        return f"({self.left}){self.core}({self.right})"


def collared_letters(s: SymbolicSubstitution) -> frozenset:
    """The collared alphabet: one letter per legal 3-word."""
    return frozenset(CollaredLetter(w[0], w[1], w[2])
                     for w in legal_words(s, 3))


def _assign_names(s, letters):
    # Subscripts follow first appearance: scan sigma^n(x) for n = 1, 2, ...
    # with x in alphabet order and windows left to right, numbering each
    # core letter as its collared variants show up.
    remaining = set(letters)
    counters = {x: 0 for x in s.alphabet}
    names = {}
    words = {x: x for x in s.alphabet}
    rounds = 0
    while remaining and rounds < 12 + 2 * len(letters):
        rounds += 1
        words = {x: s.apply(w) for x, w in words.items()}
        if sum(len(w) for w in words.values()) > 10 ** 6:
            break
        for x in s.alphabet:
            w = words[x]
            for i in range(len(w) - 2):
                cl = CollaredLetter(w[i], w[i + 1], w[i + 2])
                if cl in remaining:
                    counters[cl.core] += 1
                    names[cl] = f"{cl.core}{counters[cl.core]}"
                    remaining.discard(cl)
    for cl in sorted(remaining):  # deterministic fallback, rarely reached
        counters[cl.core] += 1
        names[cl] = f"{cl.core}{counters[cl.core]}"
    return names


@dataclass(frozen=True)
class CollaredSubstitution:
    """The substitution induced on collared letters."""

    base: SymbolicSubstitution
    letters: tuple
    names: dict
    rules: dict

    def name(self, letter: CollaredLetter) -> str:
        return self.names[letter]

    def by_name(self, name: str) -> CollaredLetter:
        for cl, nm in self.names.items():
            if nm == name:
                return cl
        raise SubstitutionError(f"no collared letter named {name!r}")

    def image(self, letter: CollaredLetter, k: int = 1) -> tuple:
        """Collared image word under the k-th power; k=0 is the identity."""
        if k < 0:
            raise SubstitutionError("power must be nonnegative")
        word = (letter,)
        for _ in range(k):
            word = tuple(m for cl in word for m in self.rules[cl])
        return word

    def render(self, word) -> str:
        return "".join(self.names[cl] for cl in word)

    def matrix(self) -> tuple:
        """Row i counts the collared letters in the image of letters[i]."""
        idx = {cl: j for j, cl in enumerate(self.letters)}
        out = []
        for cl in self.letters:
            row = [0] * len(self.letters)
            for m in self.rules[cl]:
                row[idx[m]] += 1
            out.append(tuple(row))
        return tuple(out)


def collared_substitution(s: SymbolicSubstitution) -> CollaredSubstitution:
    """Collar a substitution.

    The image of (l)c(r) is read off inside sigma(l)sigma(c)sigma(r): each
    position of sigma(c) is collared by its neighbours in that context.
    """
    letters = collared_letters(s)
    names = _assign_names(s, letters)
    ordered = tuple(sorted(letters,
                           key=lambda cl: (cl.core, int(names[cl][1:]))))
    rules = {}
    for cl in ordered:
        lw, w, rw = s.apply(cl.left), s.apply(cl.core), s.apply(cl.right)
        ctx = lw + w + rw
        off = len(lw)
        out = []
        for i in range(len(w)):
            m = CollaredLetter(ctx[off + i - 1], ctx[off + i], ctx[off + i + 1])
            if m not in letters:
                raise SubstitutionError(
                    f"window {m} in the image of {cl} is not legal")
            out.append(m)
        rules[cl] = tuple(out)
    return CollaredSubstitution(base=s, letters=ordered, names=names,
                                rules=rules)


def _collar_at(word, i):
    return CollaredLetter(word[i - 1], word[i], word[i + 1])


def forcing_table(s: SymbolicSubstitution, k: int) -> dict:
    """Flank pairs of k-th collared image words over all legal extensions.

    For every legal 5-word e.l.c.r.f the window (l)c(r) is a collared letter;
    its k-th image block sits inside sigma^k of the 5-word, flanked on the
    left by the collared last letter of the sigma^k(l) block and on the right
    by the collared first letter of the sigma^k(r) block.  Entries are keyed
    by the image word itself, so two collared letters with equal k-th images
    share a key and their flanks accumulate in one set.
    """
    if k < 1:
        raise SubstitutionError("power must be positive")
    cs = collared_substitution(s)
    table = {}
    for w in sorted(legal_words(s, 5)):
        ell = CollaredLetter(w[1], w[2], w[3])
        img = cs.image(ell, k)
        blocks = [s.apply(ch, k) for ch in w]
        big = "".join(blocks)
        left_end = len(blocks[0]) + len(blocks[1]) - 1
        right_start = left_end + 1 + len(blocks[2])
        flank = (_collar_at(big, left_end), _collar_at(big, right_start))
        table.setdefault(img, set()).add(flank)
    return table


def border_forcing_k(s: SymbolicSubstitution, kmax: int = 8):
    """Smallest k whose image words force their flanks, or None up to kmax."""
    for k in range(1, kmax + 1):
        if all(len(v) == 1 for v in forcing_table(s, k).values()):
            return k
    return None


def forcing_equations(s: SymbolicSubstitution, k: int = None,
                      kmax: int = 8) -> tuple:
    """Render the forced images, one `sigma^k(x) = (l)word(r)` line per letter."""
    if k is None:
        k = border_forcing_k(s, kmax)
        if k is None:
            raise SubstitutionError(f"no border forcing up to k={kmax}")
    table = forcing_table(s, k)
    clashes = sorted(str(img) for img, fl in table.items() if len(fl) > 1)
    if clashes:
        raise SubstitutionError(
            f"flanks are not forced at k={k}: {clashes[0]}")
    cs = collared_substitution(s)
    out = []
    for cl in cs.letters:
        img = cs.image(cl, k)
        fl, fr = next(iter(table[img]))
        out.append(f"sigma^{k}({cs.names[cl]}) = ({cs.names[fl]})"
                   f"{cs.render(img)}({cs.names[fr]})")
    return tuple(out)


@dataclass(frozen=True)
class SubshiftComplex:
    """1D Anderson-Putnam graph plus its substitution chain maps."""

    complex: CWComplex
    maps: ChainMaps
    letter_names: tuple
    vertex_classes: tuple


def ap_graph_1d(s: SymbolicSubstitution) -> SubshiftComplex:
    """Build the collared transition graph and its chain maps.

    Edges are collared letters, oriented left to right.  Every legal 4-word
    w glues the right endpoint of (w0)w1(w2) to the left endpoint of
    (w1)w2(w3); vertices are the resulting germ classes.  The edge chain map
    lists the collared image word, the vertex map sends a germ class to the
    class of the corresponding junction in the image, checked to be
    independent of the representative.
    """
    cs = collared_substitution(s)
    letters = cs.letters
    idx = {cl: i for i, cl in enumerate(letters)}
    n = len(letters)

    # endpoint slot 2i is the left end of edge i, 2i+1 its right end
    parent = list(range(2 * n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for w in sorted(legal_words(s, 4)):
        a = CollaredLetter(w[0], w[1], w[2])
        b = CollaredLetter(w[1], w[2], w[3])
        ra, rb = find(2 * idx[a] + 1), find(2 * idx[b])
        if ra != rb:
            parent[ra] = rb

    classes = {}
    members = []
    for slot in range(2 * n):
        root = find(slot)
        if root not in classes:
            classes[root] = len(members)
            members.append([])
        members[classes[root]].append(slot)
    nv = len(members)

    def vclass(slot):
        return classes[find(slot)]

    b1 = [[0] * n for _ in range(nv)]
    for i in range(n):
        tail, head = vclass(2 * i), vclass(2 * i + 1)
        if tail != head:
            b1[head][i] += 1
            b1[tail][i] -= 1
    comp = CWComplex(face_count=0, edge_count=n, vertex_count=nv,
                     boundary2=(), boundary1=tuple(map(tuple, b1)))

    s1 = cs.matrix()

    image_of = [None] * nv
    for slot in range(2 * n):
        i, side = divmod(slot, 2)
        img = cs.rules[letters[i]]
        target = 2 * idx[img[-1]] + 1 if side else 2 * idx[img[0]]
        v, w = vclass(slot), vclass(target)
        if image_of[v] is None:
            image_of[v] = w
        elif image_of[v] != w:
            raise SubstitutionError(
                f"vertex {v + 1} has no well-defined image: endpoint of "
                f"{letters[i]} maps to class {w + 1}, expected "
                f"{image_of[v] + 1}")
    s0 = tuple(tuple(1 if j == image_of[v] else 0 for j in range(nv))
               for v in range(nv))

    maps = ChainMaps(s2=(), s1=s1, s0=s0)
    check_commutation(comp, maps)
    names = tuple(cs.names[cl] for cl in letters)
    vertex_classes = tuple(
        tuple((names[slot // 2], "R" if slot % 2 else "L") for slot in group)
        for group in members)
    return SubshiftComplex(complex=comp, maps=maps, letter_names=names,
                           vertex_classes=vertex_classes)


def subshift_report(s: SymbolicSubstitution, kmax: int = 8) -> dict:
    """Full 1D pipeline: collaring, forcing, graph, cohomology, hull limits."""
    from .homology import cohomology, direct_limit, induced_endomorphisms

    cs = collared_substitution(s)
    g = ap_graph_1d(s)
    h0, h1, _ = cohomology(g.complex)
    e0, e1, _ = induced_endomorphisms(g.complex, g.maps)
    limits = {
        "H0": direct_limit(e0.group, e0.matrix).to_dict(),
        "H1": direct_limit(e1.group, e1.matrix).to_dict(),
    }
    k = border_forcing_k(s, kmax)
    forcing = {"minimalK": k, "checkedUpTo": kmax}
    if k is not None:
        forcing["equations"] = list(forcing_equations(s, k))
    checks = []

    def note(name, passed, detail=""):
        checks.append({"name": name, "passed": bool(passed), "detail": detail})

    note("primitivity", is_primitive(s))
    note("connectivity", connectivity(g.complex) == 1,
         f"{connectivity(g.complex)} component(s)")
    note("collared-closure",
         all(m in cs.rules for img in cs.rules.values() for m in img))
    return {
        "alphabet": list(s.alphabet),
        "rules": {x: s.rules[x] for x in s.alphabet},
        "collaredLetters": [{"name": cs.names[cl], "window": str(cl)}
                            for cl in cs.letters],
        "collaredRules": {cs.names[cl]: [cs.names[m] for m in cs.rules[cl]]
                          for cl in cs.letters},
        "borderForcing": forcing,
        "graph": {"edges": g.complex.edge_count,
                  "vertices": g.complex.vertex_count,
                  "vertexClasses": [["".join(slot) for slot in group]
                                    for group in g.vertex_classes]},
        "cohomology": {"H0": h0.to_dict(), "H1": h1.to_dict()},
        "induced": {"H0": e0.to_dict(), "H1": e1.to_dict()},
        "limits": limits,
        "checks": checks,
    }
