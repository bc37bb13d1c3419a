"""
Certificate text codec.

    n=2
    rank=4
    target_rank=2
    images=x1, e, x2, e
    reordering=identity
    [base]
    pair=<y> | <z>
    d4_zero=true
    evidence[1]=<ring element>
    [level 1]
    pair=...
    y_trivial=true
    z_trivial=false
    case=2
    successor=...
    evidence[1]=...
    vanishing[1]=0
    [final]
    k=2
    pair=...
    d4_zero=true
    [relation]
    relation=[x1,x2][x3,x4]
    coordinate=...
    nonzero=true

Images are the map before reordering. Ring elements use the group-ring
codec in the target group at the level of their record: 1 for the base,
k+1 for level k, n for the relation.
"""
import re
from typing import Dict, List, Tuple

from apps.free_words.serializers import format_pair, format_word, parse_word, parse_word_list
from apps.fox_calculus.serializers import format_ring, parse_ring
from apps.pair_sets.services import WordPair
from apps.special_pairs.services.certificate import (
    BaseRecord,
    FinalRecord,
    LevelRecord,
    RelationRecord,
    SpecialPairCertificate,
)
from apps.special_pairs.services.relation import SurfaceRelation
from apps.special_pairs.services.solution_map import SOURCE_RANK, Reordering, SolutionMap
from utils.exceptions import CertificateError, ConcordiaError, ResourceCapExceeded

PAIR_SEPARATOR = ' | '

_SECTION = re.compile(r'^\[(base|final|relation|level (\d+))\]$')
_INDEXED = re.compile(r'^(evidence|vanishing)\[(\d+)\]$')

_RELATIONS = {
    SurfaceRelation(g, t).variant: SurfaceRelation(g, t)
    for g in (False, True)
    for t in (False, True)
}


def _bool(value: bool) -> str:
    return 'true' if value else 'false'


def _pair(pair: WordPair) -> str:
    return format_pair(pair.components(), PAIR_SEPARATOR)


def _ring_lines(name: str, elements) -> List[str]:
    return [f"{name}[{i}]={format_ring(e)}" for i, e in enumerate(elements, start=1)]


def format_certificate(cert: SpecialPairCertificate) -> str:
    r = cert.solution_map
    lines = [
        f"n={cert.n}",
        f"rank={r.source_rank}",
        f"target_rank={r.target_rank}",
        f"images={', '.join(format_word(w) for w in r.images)}",
        f"reordering={cert.reordering.label}",
        '[base]',
        f"pair={_pair(cert.base.pair)}",
        f"d4_zero={_bool(cert.base.d4_zero)}",
    ]
    lines.extend(_ring_lines('evidence', cert.base.evidence))
    for record in cert.levels:
        lines.extend([
            f"[level {record.k}]",
            f"pair={_pair(record.pair)}",
            f"y_trivial={_bool(record.y_trivial)}",
            f"z_trivial={_bool(record.z_trivial)}",
            f"case={record.case}",
            f"successor={_pair(record.successor)}",
        ])
        lines.extend(_ring_lines('evidence', record.evidence))
        lines.extend(_ring_lines('vanishing', record.vanishing))
    lines.extend([
        '[final]',
        f"k={cert.final.k}",
        f"pair={_pair(cert.final.pair)}",
        f"d4_zero={_bool(cert.final.d4_zero)}",
        '[relation]',
        f"relation={cert.relation.relation.variant}",
        f"coordinate={format_ring(cert.relation.coordinate)}",
        f"nonzero={_bool(cert.relation.nonzero)}",
    ])
    return '\n'.join(lines) + '\n'


class _Section:
    """Key/value lines of one certificate section; indexed keys kept in order."""

    def __init__(self, name: str):
        self.name = name
        self.values: Dict[str, str] = {}
        self.indexed: Dict[str, List[str]] = {'evidence': [], 'vanishing': []}

    def add(self, key: str, value: str):
        match = _INDEXED.match(key)
        if match:
            items = self.indexed[match.group(1)]
            if int(match.group(2)) != len(items) + 1:
                raise CertificateError(f"[{self.name}] {key} out of sequence")
            items.append(value)
            return
        if key in self.values:
            raise CertificateError(f"[{self.name}] duplicate key {key!r}")
        self.values[key] = value

    def get(self, key: str) -> str:
        try:
            return self.values[key]
        except KeyError:
            raise CertificateError(f"[{self.name}] missing key {key!r}") from None

    def flag(self, key: str) -> bool:
        value = self.get(key)
        if value not in ('true', 'false'):
            raise CertificateError(f"[{self.name}] {key} must be true or false, got {value!r}")
        return value == 'true'

    def integer(self, key: str) -> int:
        value = self.get(key)
        if not re.fullmatch(r'-?\d+', value):
            raise CertificateError(f"[{self.name}] {key} must be an integer, got {value!r}")
        return int(value)

    def pair(self, key: str) -> WordPair:
        parts = self.get(key).split(PAIR_SEPARATOR.strip())
        if len(parts) != 2:
            raise CertificateError(f"[{self.name}] {key} must read 'y | z'")
        return WordPair(parse_word(parts[0], SOURCE_RANK), parse_word(parts[1], SOURCE_RANK))


def _split_sections(text: str) -> Tuple[_Section, List[_Section]]:
    header = _Section('header')
    sections: List[_Section] = []
    current = header
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('['):
            match = _SECTION.match(line)
            if not match:
                raise CertificateError(f"Line {number}: unknown section {line!r}")
            current = _Section(match.group(1))
            sections.append(current)
            continue
        key, sep, value = line.partition('=')
        if not sep:
            raise CertificateError(f"Line {number}: expected key=value")
        current.add(key.strip(), value.strip())
    return header, sections


def parse_certificate(text: str) -> SpecialPairCertificate:
    """
    Parse certificate text into records.

    Raises:
        CertificateError: On any structural or syntactic problem
    """
    try:
        return _parse(text)
    except (CertificateError, ResourceCapExceeded):
        raise
    except (ConcordiaError, ValueError) as exc:
        raise CertificateError(f"Malformed certificate: {exc}") from exc


def _parse(text: str) -> SpecialPairCertificate:
    header, sections = _split_sections(text)
    n = header.integer('n')
    if n < 1:
        raise CertificateError(f"Level n must be at least 1, got {n}")
    if header.integer('rank') != SOURCE_RANK:
        raise CertificateError(f"Source rank must be {SOURCE_RANK}")
    target_rank = header.integer('target_rank')
    images = parse_word_list(header.get('images'), target_rank)
    solution_map = SolutionMap.from_images(images, target_rank)
    reordering = Reordering.from_label(header.get('reordering'))

    names = [s.name for s in sections]
    expected = ['base'] + [f"level {k}" for k in range(1, n)] + ['final', 'relation']
    if names != expected:
        raise CertificateError(f"Sections {names} do not match the expected {expected}")
    base_section, level_sections = sections[0], sections[1:-2]
    final_section, relation_section = sections[-2], sections[-1]

    def rings(section: _Section, name: str, level: int):
        return tuple(parse_ring(t, target_rank, level) for t in section.indexed[name])

    base = BaseRecord(
        pair=base_section.pair('pair'),
        d4_zero=base_section.flag('d4_zero'),
        evidence=rings(base_section, 'evidence', 1),
    )
    levels = []
    for k, section in enumerate(level_sections, start=1):
        levels.append(LevelRecord(
            k=k,
            pair=section.pair('pair'),
            y_trivial=section.flag('y_trivial'),
            z_trivial=section.flag('z_trivial'),
            case=section.integer('case'),
            successor=section.pair('successor'),
            evidence=rings(section, 'evidence', k + 1),
            vanishing=rings(section, 'vanishing', k + 1),
        ))
    final = FinalRecord(
        k=final_section.integer('k'),
        pair=final_section.pair('pair'),
        d4_zero=final_section.flag('d4_zero'),
    )
    variant = relation_section.get('relation')
    if variant not in _RELATIONS:
        raise CertificateError(f"Unknown surface relation {variant!r}")
    relation = RelationRecord(
        relation=_RELATIONS[variant],
        coordinate=parse_ring(relation_section.get('coordinate'), target_rank, n),
        nonzero=relation_section.flag('nonzero'),
    )
    return SpecialPairCertificate(
        n=n,
        solution_map=solution_map,
        reordering=reordering,
        base=base,
        levels=tuple(levels),
        final=final,
        relation=relation,
    )
