"""Built-in catalogue: surface configurations, example pencils, nets and point sets.

Labels are stored exactly as published. Where a published label disagrees with
the arithmetic it is kept as an alias and resolved in one place
(`resolve_label`).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curves import SurfaceConfiguration
from .picard import DivisorClass, parse_label

# Fibre types as reported by the pencil lab.
THREE_GENERAL = "ThreeGeneralLines"
THREE_CONCURRENT = "ThreeConcurrentLines"
LINE_CONIC = "Line+Conic"
LINE_TANGENT_CONIC = "Line+TangentConic"
DOUBLE_LINE = "DoubleLine+Line"
TRIPLE_LINE = "TripleLine"
NODAL = "IrreducibleNodal"
CUSPIDAL = "IrreducibleCuspidal"
SMOOTH = "Smooth"

# "a conic and a line" without saying whether they are tangent
ANY_CONIC_LINE = frozenset({LINE_CONIC, LINE_TANGENT_CONIC})
ANY_THREE_LINES = frozenset({THREE_GENERAL, THREE_CONCURRENT})


@dataclass(frozen=True)
class ConfigEntry:
    name: str
    characteristic: int
    dynkin: str
    neg_two: tuple[str, ...]
    published_sections: tuple[str, ...]
    published_section_count: int
    blowdowns: tuple[tuple[str, ...], ...]
    blowdown_count: int
    # 1-based blow-down index -> published change-of-basis matrix (signed coordinates)
    matrices: dict[int, tuple[tuple[int, ...], ...]] = field(default_factory=dict)
    # 1-based blow-down index -> published relabelled (-2)-curves
    relabeled: dict[int, tuple[str, ...]] = field(default_factory=dict)
    aliases: dict[str, str] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def resolve(self, label: str) -> DivisorClass:
        return parse_label(self.aliases.get(label, label))

    def configuration(self) -> SurfaceConfiguration:
        return SurfaceConfiguration(
            characteristic=self.characteristic,
            dynkin_label=self.dynkin,
            neg_two_curves=[self.resolve(s) for s in self.neg_two],
            name=self.name,
            labels=list(self.neg_two),
        )


@dataclass(frozen=True)
class PencilEntry:
    ident: str
    config: str
    blowdown: int
    characteristic: int
    extension: int
    generators: tuple[str, str]
    expected_fibers: tuple[frozenset[str] | None, frozenset[str] | None]
    description: str
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class NetEntry:
    ident: str
    config: str
    characteristic: int
    extension: int
    generators: tuple[str, str, str]
    base_points: tuple[tuple[tuple[str, str, str], int], ...]
    notes: tuple[str, ...] = ()


def _t(*labels: str) -> tuple[str, ...]:
    return tuple(labels)


_CHAIN_E8 = _t("e1-e2", "e2-e3", "e3-e4", "e4-e5", "e5-e6", "e6-e7", "e7-e8", "e8-e9", "l-123")

# Published change-of-basis matrices, keyed by 'config/blow-down index'. The
# 'A1~^8_M' entry is the section/(-2)-curve incidence block.
PUBLISHED_MATRICES: dict[str, tuple[tuple[int, ...], ...]] = {
    'A1~^8_M': (
        ( 0,  1,  0,  1,  1,  1,  1,  1,  0,  0,  0,  0,  0,  1,  0,  1),
        ( 1,  0,  0,  1,  1,  1,  0,  0,  1,  1,  0,  0,  0,  1,  1,  0),
        ( 0,  0,  1,  1,  0,  1,  0,  1,  0,  1,  0,  1,  0,  0,  1,  1),
        ( 1,  1,  0,  1,  0,  0,  0,  1,  0,  1,  1,  1,  0,  1,  0,  0),
        ( 0,  1,  1,  1,  1,  0,  0,  0,  1,  1,  1,  0,  0,  0,  0,  1),
        ( 1,  1,  1,  1,  0,  1,  1,  0,  1,  0,  0,  1,  0,  0,  0,  0),
        ( 0,  0,  0,  1,  0,  0,  1,  0,  1,  0,  1,  1,  0,  1,  1,  1),
        ( 1,  0,  1,  1,  1,  0,  1,  1,  0,  0,  1,  0,  0,  0,  1,  0),
        ( 0,  1,  0,  0,  0,  1,  0,  0,  1,  1,  0,  1,  1,  1,  0,  1),
        ( 1,  1,  1,  0,  1,  1,  0,  1,  0,  1,  0,  0,  1,  0,  0,  0),
        ( 0,  0,  0,  0,  1,  0,  0,  1,  0,  1,  1,  0,  1,  1,  1,  1),
        ( 1,  0,  0,  0,  0,  1,  1,  1,  0,  0,  0,  1,  1,  1,  1,  0),
        ( 0,  0,  1,  0,  1,  1,  1,  0,  1,  0,  0,  0,  1,  0,  1,  1),
        ( 1,  1,  0,  0,  1,  0,  1,  0,  1,  0,  1,  0,  1,  1,  0,  0),
        ( 0,  1,  1,  0,  0,  0,  1,  1,  0,  0,  1,  1,  1,  0,  0,  1),
        ( 1,  0,  1,  0,  0,  0,  0,  0,  1,  1,  1,  1,  1,  0,  1,  0),
    ),
    'A1~^8/2': (
        ( 2,  1,  0,  1,  0,  1,  0,  0,  0,  0),
        (-1,  0,  0, -1,  0, -1,  0,  0,  0,  0),
        ( 0,  0,  1,  0,  0,  0,  0,  0,  0,  0),
        (-1, -1,  0,  0,  0, -1,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  1,  0,  0,  0,  0,  0),
        (-1, -1,  0, -1,  0,  0,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  1,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  1,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  1,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
    ),
    'A1~^4+D4~/2': (
        ( 3,  0,  0,  1,  1,  0,  2,  1,  1,  0),
        ( 0,  1,  0,  0,  0,  0,  0,  0,  0,  0),
        ( 0,  0,  1,  0,  0,  0,  0,  0,  0,  0),
        (-1,  0,  0,  0, -1,  0, -1,  0,  0,  0),
        (-1,  0,  0, -1,  0,  0, -1,  0,  0,  0),
        (-1,  0,  0,  0,  0,  0, -1,  0, -1,  0),
        (-1,  0,  0,  0,  0,  0, -1, -1,  0,  0),
        ( 0,  0,  0,  0,  0,  1,  0,  0,  0,  0),
        (-2,  0,  0, -1, -1,  0, -1, -1, -1,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
    ),
    'A1~^4+D4~/3': (
        ( 5,  2,  0,  3,  1,  0,  2,  2,  1,  1),
        (-2, -1,  0, -1, -1,  0, -1, -1,  0,  0),
        ( 0,  0,  1,  0,  0,  0,  0,  0,  0,  0),
        (-1,  0,  0, -1,  0,  0,  0, -1,  0,  0),
        (-1,  0,  0, -1,  0,  0, -1,  0,  0,  0),
        (-2, -1,  0, -1,  0,  0, -1, -1,  0, -1),
        (-2, -1,  0, -1,  0,  0, -1, -1, -1,  0),
        (-3, -1,  0, -2, -1,  0, -1, -1, -1, -1),
        (-1, -1,  0, -1,  0,  0,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  1,  0,  0,  0,  0),
    ),
    'A1~^4+D4~/4': (
        ( 2,  1,  0,  1,  0,  0,  1,  0,  0,  0),
        (-1,  0,  0, -1,  0,  0, -1,  0,  0,  0),
        ( 0,  0,  1,  0,  0,  0,  0,  0,  0,  0),
        (-1, -1,  0,  0,  0,  0, -1,  0,  0,  0),
        ( 0,  0,  0,  0,  1,  0,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  1,  0,  0,  0,  0),
        (-1, -1,  0, -1,  0,  0,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  1,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  1,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
    ),
    'A1~^2+D6~/2': (
        ( 3,  0,  0,  0,  2,  1,  1,  0,  1,  1),
        (-1,  0,  0,  0, -1,  0,  0,  0,  0, -1),
        (-1,  0,  0,  0, -1,  0,  0,  0, -1,  0),
        ( 0,  1,  0,  0,  0,  0,  0,  0,  0,  0),
        ( 0,  0,  1,  0,  0,  0,  0,  0,  0,  0),
        (-1,  0,  0,  0, -1,  0, -1,  0,  0,  0),
        (-1,  0,  0,  0, -1, -1,  0,  0,  0,  0),
        ( 0,  0,  0,  1,  0,  0,  0,  0,  0,  0),
        (-2,  0,  0,  0, -1, -1, -1,  0, -1, -1),
        ( 0,  0,  0,  0,  0,  0,  0,  1,  0,  0),
    ),
    'A1~^2+D6~/3': (
        ( 2,  1,  0,  1,  0,  0,  0,  0,  1,  0),
        (-1, -1,  0, -1,  0,  0,  0,  0,  0,  0),
        ( 0,  0,  1,  0,  0,  0,  0,  0,  0,  0),
        (-1, -1,  0,  0,  0,  0,  0,  0, -1,  0),
        ( 0,  0,  0,  0,  1,  0,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  1,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  1,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  1,  0,  0),
        (-1,  0,  0, -1,  0,  0,  0,  0, -1,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
    ),
    'A1~^2+D6~/4': (
        ( 2,  1,  1,  0,  0,  0,  0,  0,  1,  0),
        (-1, -1, -1,  0,  0,  0,  0,  0,  0,  0),
        ( 0,  0,  0,  1,  0,  0,  0,  0,  0,  0),
        (-1,  0, -1,  0,  0,  0,  0,  0, -1,  0),
        (-1, -1,  0,  0,  0,  0,  0,  0, -1,  0),
        ( 0,  0,  0,  0,  1,  0,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  1,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  1,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  1,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
    ),
    'D4~^2/2': (
        ( 2,  0,  0,  0,  1,  1,  0,  0,  1,  0),
        (-1,  0,  0,  0, -1, -1,  0,  0,  0,  0),
        ( 0,  1,  0,  0,  0,  0,  0,  0,  0,  0),
        ( 0,  0,  1,  0,  0,  0,  0,  0,  0,  0),
        ( 0,  0,  0,  1,  0,  0,  0,  0,  0,  0),
        (-1,  0,  0,  0,  0, -1,  0,  0, -1,  0),
        (-1,  0,  0,  0, -1,  0,  0,  0, -1,  0),
        ( 0,  0,  0,  0,  0,  0,  1,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  1,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
    ),
    'A1~+E7~/2': (
        ( 2,  1,  0,  1,  1,  0,  0,  0,  0,  0),
        (-1, -1,  0,  0, -1,  0,  0,  0,  0,  0),
        (-1, -1,  0, -1,  0,  0,  0,  0,  0,  0),
        ( 0,  0,  1,  0,  0,  0,  0,  0,  0,  0),
        (-1,  0,  0, -1, -1,  0,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  1,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  1,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  1,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  1,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
    ),
    'D8~/2': (
        ( 3,  0,  2,  1,  1,  1,  1,  0,  0,  0),
        (-1,  0, -1,  0,  0,  0, -1,  0,  0,  0),
        (-1,  0, -1,  0,  0, -1,  0,  0,  0,  0),
        (-1,  0, -1,  0, -1,  0,  0,  0,  0,  0),
        (-1,  0, -1, -1,  0,  0,  0,  0,  0,  0),
        ( 0,  1,  0,  0,  0,  0,  0,  0,  0,  0),
        (-2,  0, -1, -1, -1, -1, -1,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  1,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  1,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
    ),
    'A2~^4/2': (
        ( 3,  0,  2,  1,  0,  1,  0,  1,  0,  1),
        (-1,  0, -1, -1,  0,  0,  0,  0,  0,  0),
        ( 0,  1,  0,  0,  0,  0,  0,  0,  0,  0),
        (-1,  0, -1,  0,  0, -1,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  1,  0),
        (-1,  0, -1,  0,  0,  0,  0, -1,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  1,  0,  0,  0),
        (-2,  0, -1, -1,  0, -1,  0, -1,  0, -1),
        (-1,  0, -1,  0,  0,  0,  0,  0,  0, -1),
        ( 0,  0,  0,  0,  1,  0,  0,  0,  0,  0),
    ),
    'A2~^4/3': (
        ( 4,  0,  2,  2,  0,  1,  0,  1,  1,  2),
        (-2,  0, -1, -1,  0,  0,  0, -1, -1, -1),
        (-1,  0, -1, -1,  0,  0,  0,  0,  0,  0),
        ( 0,  1,  0,  0,  0,  0,  0,  0,  0,  0),
        (-2,  0, -1, -1,  0, -1,  0, -1,  0, -1),
        (-1,  0, -1,  0,  0,  0,  0,  0,  0, -1),
        ( 0,  0,  0,  0,  1,  0,  0,  0,  0,  0),
        (-2,  0, -1, -1,  0, -1,  0,  0, -1, -1),
        (-1,  0,  0, -1,  0,  0,  0,  0,  0, -1),
        ( 0,  0,  0,  0,  0,  0,  1,  0,  0,  0),
    ),
    'A2~+E6~/2': (
        ( 3,  1,  1,  1,  0,  0,  0,  2,  1,  0),
        (-1,  0,  0, -1,  0,  0,  0, -1,  0,  0),
        (-1,  0, -1,  0,  0,  0,  0, -1,  0,  0),
        (-1, -1,  0,  0,  0,  0,  0, -1,  0,  0),
        ( 0,  0,  0,  0,  1,  0,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  1,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  1,  0,  0,  0),
        (-2, -1, -1, -1,  0,  0,  0, -1, -1,  0),
        (-1,  0,  0,  0,  0,  0,  0, -1, -1,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
    ),
    'A2~+E6~/3': (
        ( 2,  0,  0,  0,  1,  1,  0,  1,  0,  0),
        (-1,  0,  0,  0,  0, -1,  0, -1,  0,  0),
        (-1,  0,  0,  0, -1,  0,  0, -1,  0,  0),
        ( 0,  1,  0,  0,  0,  0,  0,  0,  0,  0),
        ( 0,  0,  1,  0,  0,  0,  0,  0,  0,  0),
        ( 0,  0,  0,  1,  0,  0,  0,  0,  0,  0),
        (-1,  0,  0,  0, -1, -1,  0,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  1,  0,  0,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  1,  0),
        ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
    ),}


CONFIGS: dict[str, ConfigEntry] = {}


def _add(entry: ConfigEntry) -> None:
    CONFIGS[entry.name] = entry


def _matrices(name: str) -> dict[int, tuple[tuple[int, ...], ...]]:
    out = {}
    for key, m in PUBLISHED_MATRICES.items():
        base, _, idx = key.rpartition("/")
        if base == name:
            out[int(idx)] = m
    return out


_add(ConfigEntry(
    name="A1~^8",
    characteristic=2,
    dynkin="A1~^8",
    neg_two=_t(
        "l-127", "2l-345689", "l-347", "2l-125689", "l-567", "2l-123489", "l-789", "2l-123456",
        "3l-2e1-e3-e4-e5-e6-e7-e8-e9", "e1-e2",
        "3l-e1-e2-2e3-e5-e6-e7-e8-e9", "e3-e4",
        "3l-e1-e2-e3-e4-2e5-e7-e8-e9", "e5-e6",
        "3l-e1-e2-e3-e4-e5-e6-e7-2e8", "e8-e9",
    ),
    published_sections=_t(
        "e2", "e4", "e6", "e7", "e9", "l-13", "l-15", "l-18", "l-35", "l-58",
        "2l-12358", "2l-13458", "2l-13568", "2l-13578", "2l-13589",
    ),
    published_section_count=16,
    blowdowns=(
        _t("e9", "e8-e9", "e7", "e6", "e5-e6", "e4", "e3-e4", "e2", "e1-e2"),
        _t("e9", "e8-e9", "e7", "e6", "e4", "e2", "l-13", "l-15", "l-35"),
    ),
    blowdown_count=2,
    matrices=_matrices("A1~^8"),
    relabeled={2: _t(
        "l-127", "2l-345689", "l-347", "2l-125689", "l-567", "2l-123489", "2l-135789", "l-246",
        "2l-146789", "l-235", "2l-236789", "l-145", "2l-245789", "l-136", "-K-e7+e8", "e8-e9",
    )},
    # published name of 3l-e1-...-e7-2e8; the arithmetic gives -K-e8+e9
    aliases={"-K-e7+e8": "3l-e1-e2-e3-e4-e5-e6-e7-2e8"},
    notes=(
        "16 sections are claimed but 15 are printed",
        "3l-e1-...-e7-2e8 is published as -K-e7+e8; it equals -K-e8+e9",
    ),
))

_add(ConfigEntry(
    name="A1~^4+D4~",
    characteristic=2,
    dynkin="A1~^4+D4~",
    neg_two=_t(
        "e6-e7", "e8-e9", "e7-e8", "2l-123467", "l-567",
        "l-125", "2l-346789", "l-345", "2l-126789", "e3-e4", "-K-e3+e4", "e1-e2", "-K-e1+e2",
    ),
    published_sections=_t("e2", "e4", "e5", "e9", "l-13", "l-16", "l-36", "2l-13678"),
    published_section_count=8,
    blowdowns=(
        _t("e2", "e1-e2", "e4", "e3-e4", "e5", "e9", "e8-e9", "e7-e8", "e6-e7"),
        _t("e9", "2l-346789", "l-36", "e3-e4", "e2", "e1-e2", "e5", "l-567", "e7-e8"),
        _t("e2", "2l-123467", "l-36", "e6-e7", "2l-13678", "e8-e9", "l-13", "2l-346789", "e5"),
        _t("e9", "e8-e9", "e7-e8", "l-36", "l-16", "e2", "e4", "l-13", "e5"),
    ),
    blowdown_count=4,
    matrices=_matrices("A1~^4+D4~"),
    relabeled={
        2: _t("l-345", "l-589", "e5-e6", "l-125", "e6-e7", "-K-e8+e9", "e8-e9", "l-567",
              "2l-123489", "e3-e4", "-K-e3+e4", "e1-e2", "-K-e1+e2"),
        3: _t("e3-e4", "e5-e6", "l-135", "e1-e2", "l-789", "-K-e7+e8", "e7-e8", "l-569",
              "2l-123478", "2l-345678", "l-129", "2l-125678", "l-349"),
        4: _t("l-137", "e8-e9", "e7-e8", "l-247", "l-567", "l-125", "2l-346789", "l-345",
              "2l-126789", "l-146", "2l-235789", "l-236", "2l-145789"),
    },
))

_add(ConfigEntry(
    name="A1~^2+D6~",
    characteristic=2,
    dynkin="A1~^2+D6~",
    neg_two=_t(
        "e6-e7", "l-345", "e5-e6", "e4-e5", "l-148", "e8-e9", "e1-e2",
        "2l-456789", "l-123", "2l-124567", "l-389",
    ),
    published_sections=_t("e2", "e3", "e7", "e9"),
    published_section_count=4,
    blowdowns=(
        _t("e2", "e1-e2", "e3", "e7", "e6-e7", "e5-e6", "e4-e5", "e9", "e8-e9"),
        _t("e2", "e1-e2", "l-148", "e8-e9", "e3", "l-345", "e5-e6", "e7", "2l-456789"),
        _t("e2", "l-123", "e7", "e6-e7", "e5-e6", "e4-e5", "l-148", "e9", "l-389"),
        _t("e3", "l-123", "e7", "e6-e7", "e5-e6", "e4-e5", "l-148", "e1-e2", "e9"),
    ),
    blowdown_count=4,
    matrices=_matrices("A1~^2+D6~"),
    relabeled={
        2: _t("l-589", "e6-e7", "e5-e6", "l-125", "e2-e3", "e1-e2", "e3-e4", "e8-e9",
              "-K-e8+e9", "2l-123489", "l-567"),
        3: _t("e6-e7", "l-345", "e5-e6", "e4-e5", "e3-e4", "l-389", "l-123", "-K-e1+e2",
              "e1-e2", "-K-e8+e9", "e8-e9"),
        4: _t("e7-e8", "2l-123456", "e6-e7", "e5-e6", "e4-e5", "l-349", "e3-e4", "-K-e1+e2",
              "e1-e2", "2l-345678", "l-129"),
    },
))

_add(ConfigEntry(
    name="D4~^2",
    characteristic=2,
    dynkin="D4~^2",
    neg_two=_t(
        "e6-e7", "e8-e9", "l-468", "e4-e5", "l-123",
        "l-189", "l-167", "e1-e2", "l-145", "e2-e3",
    ),
    published_sections=_t("e3", "e5", "e7", "e9"),
    published_section_count=4,
    blowdowns=(
        _t("e3", "e2-e3", "e1-e2", "e5", "e4-e5", "e7", "e6-e7", "e9", "e8-e9"),
        _t("e3", "e2-e3", "e1-e2", "l-145", "e7", "e6-e7", "l-468", "e4-e5", "e9"),
    ),
    blowdown_count=2,
    matrices=_matrices("D4~^2"),
    relabeled={2: _t("e7-e8", "l-569", "e6-e7", "e5-e6", "2l-123456", "l-129", "2l-125678",
                     "e2-e3", "e1-e2", "e3-e4")},
))

_add(ConfigEntry(
    name="A1~+E7~",
    characteristic=2,
    dynkin="A1~+E7~",
    neg_two=_t(
        "e8-e9", "e7-e8", "e6-e7", "e5-e6", "e4-e5", "e3-e4", "l-123", "l-345",
        "-K-e1+e2", "e1-e2",
    ),
    published_sections=_t("e2", "e9"),
    published_section_count=2,
    blowdowns=(
        _t("e2", "e1-e2", "e9", "e8-e9", "e7-e8", "e6-e7", "e5-e6", "e4-e5", "e3-e4"),
        _t("e2", "l-123", "e3-e4", "e9", "e8-e9", "e7-e8", "e6-e7", "e5-e6", "l-345"),
    ),
    blowdown_count=2,
    matrices=_matrices("A1~+E7~"),
    relabeled={2: _t("e8-e9", "e7-e8", "e6-e7", "e5-e6", "l-145", "e1-e2", "e2-e3", "e4-e5",
                     "2l-456789", "l-123")},
    notes=("the prose says four ways to blow down; the diagrams and the overview give two",),
))

_add(ConfigEntry(
    name="D8~",
    characteristic=2,
    dynkin="D8~",
    neg_two=_t("l-123", "e2-e3", "e3-e4", "e4-e5", "e5-e6", "e6-e7", "e7-e8", "e8-e9", "2l-234567"),
    published_sections=_t("e1", "e9"),
    published_section_count=2,
    blowdowns=(
        _t("e1", "e9", "e8-e9", "e7-e8", "e6-e7", "e5-e6", "e4-e5", "e3-e4", "e2-e3"),
        _t("e1", "l-123", "e3-e4", "e4-e5", "e5-e6", "e9", "e8-e9", "e7-e8", "2l-234567"),
    ),
    blowdown_count=2,
    matrices=_matrices("D8~"),
    relabeled={2: _t("e4-e5", "l-123", "e3-e4", "e2-e3", "e1-e2", "l-167", "e7-e8", "e8-e9",
                     "e6-e7")},
))

_add(ConfigEntry(
    name="E8~",
    characteristic=2,
    dynkin="E8~",
    neg_two=_CHAIN_E8,
    published_sections=_t("e9"),
    published_section_count=1,
    blowdowns=(_t("e9", "e8-e9", "e7-e8", "e6-e7", "e5-e6", "e4-e5", "e3-e4", "e2-e3", "e1-e2"),),
    blowdown_count=1,
))

_add(ConfigEntry(
    name="A2~^4",
    characteristic=3,
    dynkin="A2~^4",
    neg_two=_t(
        "l-123", "l-456", "l-789", "l-147", "l-258", "l-369",
        "l-159", "l-267", "l-348", "l-168", "l-249", "l-357",
    ),
    published_sections=_t("e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9"),
    published_section_count=9,
    blowdowns=(
        _t("e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9"),
        _t("e1", "l-123", "e8", "l-258", "e6", "l-267", "e4", "l-249", "l-357"),
        _t("e1", "l-123", "l-789", "e4", "l-249", "l-357", "e6", "l-369", "l-258"),
    ),
    blowdown_count=3,
    matrices=_matrices("A2~^4"),
    relabeled={
        2: _t("e1-e2", "2l-156789", "l-134", "2l-123789", "e3-e4", "l-356", "l-125", "e5-e6",
              "2l-345789", "-K-e7+e9", "e8-e9", "e7-e8"),
        3: _t("e2-e3", "-K-e1+e3", "e1-e2", "-K-e7+e9", "e7-e8", "e8-e9", "l-123", "l-789",
              "l-456", "-K-e4+e6", "e5-e6", "e4-e5"),
    },
))

_add(ConfigEntry(
    name="A2~+E6~",
    characteristic=3,
    dynkin="A2~+E6~",
    neg_two=_t(
        "l-123", "l-456", "l-789",
        "e2-e3", "e1-e2", "l-147", "e7-e8", "e8-e9", "e4-e5", "e5-e6",
    ),
    published_sections=_t("e3", "e6", "e9"),
    published_section_count=3,
    blowdowns=(
        _t("e3", "e2-e3", "e1-e2", "e6", "e5-e6", "e4-e5", "e9", "e8-e9", "e7-e8"),
        _t("e6", "e5-e6", "e4-e5", "l-147", "e1-e2", "e2-e3", "e9", "l-789", "l-123"),
        _t("e3", "e2-e3", "e1-e2", "l-147", "e4-e5", "e6", "l-456", "e9", "e8-e9"),
    ),
    blowdown_count=3,
    matrices=_matrices("A2~+E6~"),
    relabeled={
        2: _t("e7-e8", "e8-e9", "-K-e7+e9", "e1-e2", "e2-e3", "e3-e4", "l-123", "l-789",
              "e4-e5", "e5-e6"),
        3: _t("2l-123456", "l-689", "e6-e7", "e4-e5", "e3-e4", "e2-e3", "l-128", "e8-e9",
              "e1-e2", "l-167"),
    },
))

_add(ConfigEntry(
    name="E8~char3",
    characteristic=3,
    dynkin="E8~",
    neg_two=_CHAIN_E8,
    published_sections=_t("e9"),
    published_section_count=1,
    blowdowns=(_t("e9", "e8-e9", "e7-e8", "e6-e7", "e5-e6", "e4-e5", "e3-e4", "e2-e3", "e1-e2"),),
    blowdown_count=1,
))

CHAR2_ORDER = ("A1~^8", "A1~^4+D4~", "A1~^2+D6~", "D4~^2", "A1~+E7~", "D8~", "E8~")
CHAR3_ORDER = ("A2~^4", "A2~+E6~", "E8~char3")
PUBLISHED_MW_ORDERS = {
    "A1~^8": 16, "A1~^4+D4~": 8, "A1~^2+D6~": 4, "D4~^2": 4, "A1~+E7~": 2, "D8~": 2, "E8~": 1,
    "A2~^4": 9, "A2~+E6~": 3, "E8~char3": 1,
}


# -- example pencils ---------------------------------------------------------------

_CL = ANY_CONIC_LINE
_3L = ANY_THREE_LINES


def _f(*names: str) -> frozenset[str]:
    return frozenset(names)


PENCILS: dict[str, PencilEntry] = {}


def _pencil(ident, config, blowdown, p, n, gens, fibers, description, notes=()) -> None:
    PENCILS[ident] = PencilEntry(ident, config, blowdown, p, n, tuple(gens), tuple(fibers), description, tuple(notes))


_pencil(
    "A1~^8/1", "A1~^8", 1, 2, 2,
    ("xy+xz+yz+phi x^2", "phi^2(xy+xz+yz)+phi y^2"),
    (None, None),
    "five ordinary points and four infinitely-near points in the direction of the fifth",
    ("family a^2(xy+xz+yz)+(ab+ac+bc)x^2, b^2(xy+xz+yz)+(ab+ac+bc)y^2 at (a,b,c) = (1,phi,0)",),
)
_pencil(
    "A1~^8/2", "A1~^8", 2, 2, 3,
    ("g(x^2y+xy^2)+(g^2+g)(x^2z+xz^2)", "(g^2+1)(x^2y+xy^2)+(g^2+g)(y^2z+yz^2)"),
    (None, None),
    "seven Fano points and a general eighth point blown up twice",
    ("family (ac+c^2)(x^2y+xy^2)+(ab+b^2)(x^2z+xz^2), (bc+c^2)(x^2y+xy^2)+(ab+b^2)(y^2z+yz^2)"
     " at (a,b,c) = (1,g,g^2) over GF(8)",),
)
_pencil(
    "A1~^4+D4~/1", "A1~^4+D4~", 1, 2, 2,
    ("x^2z+xy^2", "x^2z+phi xz^2+phi^2y^2z"),
    (_f(LINE_TANGENT_CONIC), _CL),
    "conic and tangent line; conic meeting the first twice with multiplicity 2 and a line",
)
_pencil(
    "A1~^4+D4~/2", "A1~^4+D4~", 2, 2, 2,
    ("(y^2+xz)(x+phi z)", "xz(x+z)"),
    (_CL, _f(THREE_CONCURRENT)),
    "conic and line; three concurrent lines tangent to the conic",
)
_pencil(
    "A1~^4+D4~/3", "A1~^4+D4~", 3, 2, 2,
    ("(y^2+xz)(x+phi z)", "y^2(x+z)"),
    (_CL, _f(DOUBLE_LINE)),
    "conic and line; tangent line and a double line",
)
_pencil(
    "A1~^4+D4~/4", "A1~^4+D4~", 4, 2, 2,
    ("(x+y)(x+z)(y+z)", "(x+y+z)(x(y+z)+phi y(x+z))"),
    (_f(THREE_CONCURRENT), _CL),
    "three concurrent lines; a line and a conic through the concurrency point",
    ("family (x+y+z)(Ax(y+z)+By(x+z)) at (A,B) = (1,phi)",),
)
_pencil(
    "A1~^2+D6~/1", "A1~^2+D6~", 1, 2, 2,
    ("(y^2+xz)(x+z)", "xy^2"),
    (_CL, _f(DOUBLE_LINE)),
    "conic and line; tangent line and a double line",
)
_pencil(
    "A1~^2+D6~/2", "A1~^2+D6~", 2, 2, 2,
    ("(y^2+xz)(x+z)", "x^2z"),
    (_CL, _f(DOUBLE_LINE)),
    "conic and line; two tangent lines meeting on the first line, one of them double",
)
_pencil(
    "A1~^2+D6~/3", "A1~^2+D6~", 3, 2, 2,
    ("x^3+y^2z", "xz(x+z)"),
    (_f(CUSPIDAL), _f(THREE_CONCURRENT)),
    "cuspidal cubic; three concurrent lines",
)
_pencil(
    "A1~^2+D6~/4", "A1~^2+D6~", 4, 2, 2,
    ("(y^2+xz)x", "z(y^2+x^2+xz)"),
    (_f(LINE_TANGENT_CONIC), _CL),
    "conic and tangent line; tangent line and a conic meeting the first with multiplicity 4",
)
_pencil(
    "D4~^2/1", "D4~^2", 1, 2, 2,
    ("x(x+z)z", "y^2(x+phi z)"),
    (_f(THREE_CONCURRENT), _f(DOUBLE_LINE)),
    "three concurrent lines; a line and a double line",
)
_pencil(
    "D4~^2/2", "D4~^2", 2, 2, 2,
    ("x(y^2+xz)", "z(phi y^2+xz)"),
    (_f(LINE_TANGENT_CONIC), _f(LINE_TANGENT_CONIC)),
    "conic and tangent line; second conic and a line tangent to both conics",
)
_pencil(
    "A1~+E7~/1", "A1~+E7~", 1, 2, 2,
    ("x^3+y^2z", "xz^2"),
    (_f(CUSPIDAL), _f(DOUBLE_LINE)),
    "cuspidal cubic; a line and a double line",
    ("published first generator x^2+y^2z is not a cubic; read as x^3+y^2z",),
)
_pencil(
    "A1~+E7~/2", "A1~+E7~", 2, 2, 2,
    ("(y^2+xz)z", "x^3"),
    (_CL, _f(TRIPLE_LINE)),
    "conic and line; a triple line tangent to the conic",
)
_pencil(
    "D8~/1", "D8~", 1, 2, 2,
    ("(y^2+x^2+xz+z^2)(x+z)", "x^3+y^2z"),
    (_CL, _f(CUSPIDAL)),
    "cuspidal cubic; a tangent line and a conic",
    ("published as a conic; a pencil is meant",),
)
_pencil(
    "D8~/2", "D8~", 2, 2, 2,
    ("x^3+y^2z", "(x+z)^2z"),
    (_f(CUSPIDAL), _f(DOUBLE_LINE)),
    "cuspidal cubic; a line and a double line",
)
_pencil(
    "E8~/1", "E8~", 1, 2, 2,
    ("x^3+y^2z", "y^3"),
    (_f(CUSPIDAL), _f(TRIPLE_LINE)),
    "cuspidal cubic; a triple line through the cusp",
)
_pencil(
    "A2~^4/1", "A2~^4", 1, 3, 1,
    ("x(x+z)(x-z)", "y(y+z)(y-z)"),
    (_f(THREE_CONCURRENT), _f(THREE_CONCURRENT)),
    "two triples of concurrent lines",
)
_pencil(
    "A2~^4/2", "A2~^4", 2, 3, 1,
    ("2x^2z+yz^2", "xy^2+2yz^2"),
    (_CL, _CL),
    "conic and line; tangent line and a conic",
)
_pencil(
    "A2~^4/3", "A2~^4", 3, 3, 1,
    ("x^3-y^2z", "yz(y-z)"),
    (_f(CUSPIDAL), _3L),
    "flexible cuspidal cubic; three lines",
)
_pencil(
    "A2~+E6~/1", "A2~+E6~", 1, 3, 1,
    ("xyz", "(x+y+z)^3"),
    (_3L, _f(TRIPLE_LINE)),
    "three lines; a triple line",
)
_pencil(
    "A2~+E6~/3", "A2~+E6~", 3, 3, 1,
    ("x^2(x-y)", "(2xy+2xz+y^2)z"),
    (_CL, _f(DOUBLE_LINE)),
    "conic and line; a line and a double line",
)
_pencil(
    "E8~char3/1", "E8~char3", 1, 3, 1,
    ("x^3+y^2z", "y^3"),
    (_f(CUSPIDAL), _f(TRIPLE_LINE)),
    "cuspidal cubic; a triple line through the cusp",
)


# -- nets with unexpected cubics ------------------------------------------------------

NETS: dict[str, NetEntry] = {}


def _net(ident, config, n, gens, points, notes=()) -> None:
    NETS[ident] = NetEntry(ident, config, 2, n, tuple(gens), tuple(points), tuple(notes))


_net("sec3-1a", "A1~^8/1", 1, ("x^2(y+z)", "y^2(x+z)", "z^2(x+y)"),
     [(("1", "0", "0"), 2), (("0", "1", "0"), 2), (("0", "0", "1"), 2), (("1", "1", "1"), 1)])
_net("sec3-1b", "A1~^8/2", 1, ("xy(x+y)", "xz(x+z)", "yz(y+z)"),
     [((a, b, c), 1) for (a, b, c) in
      (("1", "0", "0"), ("0", "1", "0"), ("0", "0", "1"), ("1", "1", "0"),
       ("1", "0", "1"), ("0", "1", "1"), ("1", "1", "1"))])
_net("sec3-2a", "A1~^4+D4~/1", 2, ("x^2z+xy^2", "x^2z+phi xz^2+phi^2y^2z", "x^2z+xz^2+phi y^2z"),
     [(("0", "0", "1"), 4), (("1", "0", "0"), 2), (("0", "1", "0"), 1)])
_net("sec3-2b", "A1~^4+D4~/2", 2, ("(y^2+xz)(x+phi z)", "xz(x+z)", "xz(x+phi^2z)"),
     [(("1", "0", "0"), 2), (("0", "0", "1"), 2), (("0", "1", "0"), 3)])
_net("sec3-2c", "A1~^4+D4~/3", 2, ("(y^2+xz)(x+phi z)", "y^2(x+z)", "y^2(x+phi^2z)"),
     [(("0", "0", "1"), 2), (("phi", "0", "1"), 2), (("1", "0", "0"), 2), (("0", "1", "0"), 1)])
_net("sec3-3a", "A1~^2+D6~/2", 1, ("(y^2+xz)(x+z)", "x^2z", "x^2(x+z)"),
     [(("0", "0", "1"), 4), (("0", "1", "0"), 2)],
     ("published as the first blow-down; its first two generators span the second example pencil",
      "the published multiset has six points, not seven"))
_net("sec3-3b", "A1~^2+D6~/3", 2, ("x^3+y^2z", "xz(x+z)", "xz(x+phi z)"),
     [(("0", "0", "1"), 2), (("0", "1", "0"), 5)],
     ("listed second but published as the third blow-down; matched by content",))
_net("sec3-3c", "A1~^2+D6~/4", 2, ("x(y^2+xz)", "z(y^2+x^2+xz)", "(x+z)(y^2+phi x^2+xz)"),
     [(("0", "0", "1"), 6), (("0", "1", "0"), 1)])


# -- point sets ---------------------------------------------------------------------

FANO_POINTS: tuple[tuple[int, int, int], ...] = (
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1),
)


@dataclass(frozen=True)
class DoublePointExample:
    """A char-3 pencil together with the third cubic used to cut seven base points."""

    ident: str
    pencil: str
    third: str | None
    omit: tuple[int, int, int]
    published_matrix: tuple[tuple[str, str, str], ...] | None = None
    published_det: str | None = None


SEVEN_POINT_SETS: tuple[DoublePointExample, ...] = (
    DoublePointExample(
        ident="A2~^4:omit(0,1,0)",
        pencil="A2~^4/2",
        third="(xz+2y^2)(x+2y)",
        omit=(0, 1, 0),
        published_matrix=(
            ("-A^2B+B^3", "-A^2+B", "AB^2-B"),
            ("-B^2-A-B", "A", "B^2"),
            ("AB-A", "1", "-AB-1"),
        ),
        published_det="A^4B^2-A^3B^3-A^2B^4+A^4B+A^2B^3-AB^4-B^5+A^3B-AB^3+A^3",
    ),
    DoublePointExample(ident="A2~^4:omit(0,0,1)", pencil="A2~^4/2", third=None, omit=(0, 0, 1)),
    DoublePointExample(ident="A2~^4:omit(1,0,0)", pencil="A2~^4/2", third=None, omit=(1, 0, 0)),
)

# the two seven-point subsets of the A2~+E6~ base locus: drop either double point
A2E6_PENCIL = "A2~+E6~/3"


def resolve_label(config: str, label: str) -> DivisorClass:
    return CONFIGS[config].resolve(label)


def configuration(name: str) -> SurfaceConfiguration:
    try:
        return CONFIGS[name].configuration()
    except KeyError:
        raise KeyError(f"unknown built-in configuration {name!r}") from None


@dataclass(frozen=True)
class Catalog:
    configs: dict[str, ConfigEntry]
    pencils: dict[str, PencilEntry]
    nets: dict[str, NetEntry]
    fano: tuple[tuple[int, int, int], ...]


def registry() -> Catalog:
    return Catalog(CONFIGS, PENCILS, NETS, FANO_POINTS)
