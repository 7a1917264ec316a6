import dataclasses
import functools
import logging

from .common import (
    IDENTITY,
    GarsideError,
    StructureAxiomError,
    StructureParseError,
)
from .structure import StructureTable, validate_structure

HEADER = "garside-structure v1"
SECTIONS = ("simples", "atoms", "delta", "product")

# Desk-scale limits: every table is validated by exhaustion
BRAID_STRANDS = (2, 7)
ABELIAN_RANK = (1, 12)


@dataclasses.dataclass(frozen=True)
class InstanceSpec:
    kind: str
    params: tuple[int, ...] = ()
    path: str | None = None

    def __str__(self):
        if self.kind == "custom":
            return f"custom:{self.path}"
        return ":".join([self.kind] + [str(p) for p in self.params])


def parse_instance(text):
    """
    Parse braid:n, torus:a:b, free_abelian:l or custom:path.
    """
    kind, _, rest = text.partition(":")
    if kind == "custom":
        if not rest:
            raise GarsideError("custom: needs a path")
        return InstanceSpec("custom", path=rest)
    arity = {"braid": 1, "torus": 2, "free_abelian": 1}
    if kind not in arity:
        raise GarsideError(f"Unknown instance kind {kind!r}")
    try:
        params = tuple(int(p) for p in rest.split(":"))
    except ValueError:
        raise GarsideError(f"Instance parameters must be integers: {text!r}")
    if len(params) != arity[kind]:
        raise GarsideError(f"{kind} takes {arity[kind]} parameter(s)")
    return InstanceSpec(kind, params)


def build_instance(spec):
    """:returns: The validated StructureTable described by an InstanceSpec"""
    if spec.kind == "braid":
        return braid_classical(*spec.params)
    elif spec.kind == "torus":
        return torus(*spec.params)
    elif spec.kind == "free_abelian":
        return free_abelian(*spec.params)
    else:
        try:
            with open(spec.path, "rb") as f:
                text = f.read()
        except OSError as e:
            raise GarsideError(f"Can't read structure file: {e}")
        return load_structure(text, label=str(spec))


def _checked(table):
    report = validate_structure(table)
    if not report.passed:
        raise StructureAxiomError(report)
    return table


def _dotted(spelling, atom_names):
    return ".".join(atom_names[a] for a in spelling)


def braid_permutations(n):
    """
    The permutation braids of B_n, closed from the identity under right
    multiplication by the atoms σ1..σn-1 while the length grows.

    A permutation is the tuple reached by swapping positions i-1 and i of
    (0, ..., n-1) for every σi of a reduced word, read left to right.

    :returns: (permutations in index order, their atom spellings)
    """
    perms = [tuple(range(n))]
    spellings = [()]
    index = {perms[0]: 0}
    for x, spelling in zip(perms, spellings):
        for i in range(n - 1):
            # σ(i+1) lengthens x exactly when positions i, i+1 aren't inverted
            if x[i] < x[i + 1]:
                y = x[:i] + (x[i + 1], x[i]) + x[i + 2 :]
                if y not in index:
                    index[y] = len(perms)
                    perms.append(y)
                    spellings.append(spelling + (i + 1,))
    return perms, spellings


@functools.cache
def braid_classical(n):
    """The classical Garside structure of the n-strand braid group."""
    if not BRAID_STRANDS[0] <= n <= BRAID_STRANDS[1]:
        raise GarsideError(f"braid:{n} needs {BRAID_STRANDS[0]} ≤ n ≤ {BRAID_STRANDS[1]}")
    perms, spellings = braid_permutations(n)
    index = {perm: i for i, perm in enumerate(perms)}
    delta = index[tuple(reversed(range(n)))]
    atom_names = {i: f"s{i}" for i in range(1, n)}
    names = ["1"] + [_dotted(s, atom_names) for s in spellings[1:]]
    if delta not in range(1, n):
        names[delta] = "D"

    # x·y is simple exactly when lengths add. For each x, walk the y's
    # atom by atom, keeping z = x·y free of new inversions.
    product = {}
    for ix, x in enumerate(perms):
        seen = {IDENTITY}
        frontier = [(IDENTITY, x)]
        while frontier:
            following = []
            for iy, z in frontier:
                product[ix, iy] = index[z]
                for i in range(n - 1):
                    if z[i] < z[i + 1]:
                        y = perms[iy]
                        iy2 = index[y[:i] + (y[i + 1], y[i]) + y[i + 2 :]]
                        if iy2 not in seen:
                            seen.add(iy2)
                            z2 = z[:i] + (z[i + 1], z[i]) + z[i + 2 :]
                            following.append((iy2, z2))
            frontier = following
    logging.debug(f"braid:{n} has {len(perms)} simples, {len(product)} products")
    atoms = list(range(1, n))
    return _checked(StructureTable(names, atoms, delta, product, label=f"braid:{n}"))


@functools.cache
def torus(a, b):
    """The structure of ⟨x, y | x^a = y^b⟩ with Δ = x^a = y^b."""
    if a < 2 or b < 2:
        raise GarsideError(f"torus:{a}:{b} needs a, b ≥ 2")
    x = list(range(1, a))
    y = list(range(a, a + b - 1))
    delta = a + b - 1
    names = (
        ["1"]
        + [".".join(["x"] * i) for i in range(1, a)]
        + [".".join(["y"] * j) for j in range(1, b)]
        + ["D"]
    )

    product = {}
    for gens, order in ((x, a), (y, b)):
        # Index of the i-th power, with 0 -> 1 and order -> Δ
        power_index = [IDENTITY] + gens + [delta]
        for i in range(1, order):
            for j in range(1, order - i + 1):
                product[power_index[i], power_index[j]] = power_index[i + j]
    return _checked(
        StructureTable(names, [1, a], delta, product, label=f"torus:{a}:{b}")
    )


@functools.cache
def free_abelian(rank):
    """Z^rank with simples {0,1}^rank and Δ = (1, ..., 1)."""
    if not ABELIAN_RANK[0] <= rank <= ABELIAN_RANK[1]:
        raise GarsideError(
            f"free_abelian:{rank} needs {ABELIAN_RANK[0]} ≤ l ≤ {ABELIAN_RANK[1]}"
        )
    # Simples are bitmasks, ordered by weight so the atoms follow 1
    masks = sorted(
        range(1 << rank),
        key=lambda m: (m.bit_count(), [i for i in range(rank) if m >> i & 1]),
    )
    index = {m: i for i, m in enumerate(masks)}
    full = (1 << rank) - 1
    names = ["1"] + [
        ".".join(f"e{i + 1}" for i in range(rank) if m >> i & 1) for m in masks[1:]
    ]
    if rank > 1:
        names[index[full]] = "D"
    product = {
        (index[s], index[t]): index[s | t]
        for s in masks
        for t in masks
        if not s & t
    }
    atoms = [index[1 << i] for i in range(rank)]
    return _checked(
        StructureTable(names, atoms, index[full], product, label=f"free_abelian:{rank}")
    )


def serialize_structure(table):
    """Canonical text of a table: sections in order, entries by index."""
    lines = [HEADER, "simples:"]
    lines += table.names
    lines += ["atoms:", " ".join(table.names[a] for a in table.atoms)]
    lines += ["delta:", table.names[table.delta], "product:"]
    lines += [
        f"{table.names[s]} {table.names[t]} = {table.names[c]}"
        for (s, t), c in sorted(table.product.items())
    ]
    return "\n".join(lines) + "\n"


def parse_structure(text, label="custom"):
    """
    Parse the structure file format without validating the axioms.

    :param text: bytes or str
    :returns: An unvalidated StructureTable
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise StructureParseError(f"not UTF-8 ({e.reason})", 1)
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise StructureParseError(f"expected header {HEADER!r}", 1)

    sections = {}
    current = None
    for number, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line:
            continue
        if line.endswith(":") and " " not in line:
            name = line[:-1]
            if name not in SECTIONS:
                raise StructureParseError(f"unknown section {name!r}", number)
            if name in sections:
                raise StructureParseError(f"section {name!r} repeated", number)
            expected = SECTIONS[len(sections)]
            if name != expected:
                raise StructureParseError(
                    f"section {name!r} out of order, expected {expected!r}",
                    number,
                )
            sections[name] = []
            current = name
        elif current is None:
            raise StructureParseError("entry outside of a section", number)
        else:
            sections[current].append((number, line))
    for name in SECTIONS:
        if name not in sections:
            raise StructureParseError(f"missing {name!r} section", len(lines) + 1)

    names = [line for _, line in sections["simples"]]
    if not names or names[0] != "1":
        line = sections["simples"][0][0] if names else len(lines)
        raise StructureParseError("the first simple must be 1", line)
    index = {}
    for number, name in sections["simples"]:
        if " " in name:
            raise StructureParseError(f"simple name {name!r} has a space", number)
        index.setdefault(name, len(index))

    def lookup(name, number):
        if name not in index:
            raise StructureParseError(f"unknown simple {name!r}", number)
        return index[name]

    atoms = [
        lookup(name, number)
        for number, line in sections["atoms"]
        for name in line.split()
    ]
    if len(sections["delta"]) != 1:
        line = sections["delta"][1][0] if sections["delta"] else len(lines)
        raise StructureParseError("delta needs exactly one name", line)
    delta = lookup(*sections["delta"][0][::-1])

    product = {}
    for number, line in sections["product"]:
        tokens = line.split()
        if len(tokens) != 4 or tokens[2] != "=":
            raise StructureParseError(f"expected 'a b = c', got {line!r}", number)
        s, t, c = (lookup(tokens[i], number) for i in (0, 1, 3))
        if product.setdefault((s, t), c) != c:
            raise StructureParseError(f"product {tokens[0]} {tokens[1]} given twice", number)
    return StructureTable(names, atoms, delta, product, label=label)


def load_structure(text, label="custom"):
    """Parse a structure file and reject it unless it is a Garside structure."""
    return _checked(parse_structure(text, label=label))
