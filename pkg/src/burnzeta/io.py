"""JSON readers and writers for groups, G-sets, maps, strata and results."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .acampo import PairClass, ResolutionData, StratumRecord, stratum_from_total_euler
from .burnside import BurnsideElement, RationalBurnside
from .dynamics import EquivariantMap
from .errors import ValidationError
from .groups import Group, Subgroup, group_from_generators, named_group
from .gsets import GSet, coset_gset, disjoint_union, empty_gset
from .rational import RationalFunction
from .series import BurnsideSeries, CyclotomicFactorization, RationalCoefficientFunction

_GROUPS: dict = {}

_SHORTHAND = re.compile(r"^(?P<kind>[a-z]+?)[:_-]?(?P<n>\d+)$")
_KINDS = {"z": "cyclic", "c": "cyclic", "cyclic": "cyclic",
          "s": "symmetric", "sym": "symmetric", "symmetric": "symmetric",
          "d": "dihedral", "dih": "dihedral", "dihedral": "dihedral"}


def read_json(source):
    """Parse a path, an inline JSON string, or pass a dict/list through."""
    if isinstance(source, (dict, list)):
        return source
    text = str(source).strip()
    if text.startswith("{") or text.startswith("["):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid inline JSON: {exc}") from None
    path = Path(text)
    if not path.exists():
        raise FileNotFoundError(f"no such file: {text}")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{text}: invalid JSON: {exc}") from None


def _cache_key(ref: dict) -> str:
    return json.dumps(ref, sort_keys=True)


def load_group(ref) -> Group:
    """Group from ``s3``/``z6``/``d4``/``cyclic:6``, a JSON object, or a file path.

    Equal references return the same :class:`Group` object, so elements parsed
    from different files can be combined.
    """
    if isinstance(ref, Group):
        return ref
    if isinstance(ref, str):
        m = _SHORTHAND.match(ref.strip().lower())
        if m and m.group("kind") in _KINDS:
            ref = {"kind": _KINDS[m.group("kind")], "n": int(m.group("n"))}
        else:
            ref = read_json(ref)
    if not isinstance(ref, dict):
        raise ValidationError("group reference must be a JSON object")
    if "kind" in ref:
        if ref["kind"] not in ("cyclic", "symmetric", "dihedral") or not isinstance(ref.get("n"), int):
            raise ValidationError('group object needs "kind" in cyclic|symmetric|dihedral and integer "n"')
        norm = {"kind": ref["kind"], "n": ref["n"]}
        key = _cache_key(norm)
        if key not in _GROUPS:
            _GROUPS[key] = named_group(ref["kind"], ref["n"])
        return _GROUPS[key]
    if "degree" in ref:
        gens = ref.get("generators", [])
        if not isinstance(ref["degree"], int) or not isinstance(gens, list):
            raise ValidationError('group object needs integer "degree" and a "generators" list')
        norm = {"degree": ref["degree"], "generators": gens}
        key = _cache_key(norm)
        if key not in _GROUPS:
            _GROUPS[key] = group_from_generators(ref["degree"], gens, name=ref.get("name"))
        return _GROUPS[key]
    raise ValidationError('group object needs either "kind"/"n" or "degree"/"generators"')


def group_to_json(g: Group) -> dict:
    out = {"ref": g.ref, "name": g.name, "order": g.order, "abelian": g.is_abelian,
           "generators": list(g.generators)}
    if g.permutations is not None:
        out["elements"] = [list(p) for p in g.permutations]
    return out


def lattice_to_json(g: Group) -> dict:
    lat = g.lattice()
    classes = []
    for c in lat:
        classes.append({
            "label": f"G/{c.label}", "name": c.name, "order": c.order, "size": c.size,
            "representative": list(c.representative.members),
            "conjugates": [list(s.members) for s in c.conjugates],
            "contained_in": [f"G/{d.label}" for d in lat if lat.leq[c.index][d.index] and d is not c],
        })
    return {"group": g.ref, "classes": classes}


def marks_to_json(g: Group) -> dict:
    lat = g.lattice()
    labels = [f"G/{c.label}" for c in lat]
    return {"group": g.ref, "columns": labels,
            "rows": {lab: list(row) for lab, row in zip(labels, lat.marks.rows)}}


def load_gset(source, group: Group = None) -> GSet:
    """G-set from ``size``/``action_of_generators``, ``coset_of`` or ``cosets``."""
    data = read_json(source)
    if "group" in data:
        group = load_group(data["group"])
    if group is None:
        raise ValidationError('G-set needs a "group" reference')
    if "coset_of" in data:
        sub = Subgroup.of(group, data["coset_of"])
        lat = group.lattice()
        return coset_gset(lat, lat.class_of(sub))
    if "cosets" in data:
        lat = group.lattice()
        parts = [coset_gset(lat, lat.resolve(lbl)) for lbl in data["cosets"]]
        if not parts:
            return empty_gset(group)
        return disjoint_union(*parts)
    if "size" in data and "action_of_generators" in data:
        return GSet.from_generator_images(group, int(data["size"]), data["action_of_generators"])
    raise ValidationError('G-set needs "coset_of", "cosets", or "size" with "action_of_generators"')


def load_map(source) -> EquivariantMap:
    data = read_json(source)
    if "gset" not in data or "images" not in data:
        raise ValidationError('map file needs "gset" and "images"')
    return EquivariantMap(load_gset(data["gset"]), data["images"])


def _load_subgroup(group, members, what):
    if not isinstance(members, list):
        raise ValidationError(f'stratum "{what}" must be a list of element indices')
    return Subgroup.of(group, members)


def load_strata(source) -> ResolutionData:
    data = read_json(source)
    if "group" not in data or "strata" not in data:
        raise ValidationError('strata file needs "group" and "strata"')
    group = load_group(data["group"])
    records = []
    for i, s in enumerate(data["strata"]):
        try:
            m = int(s["m"])
            pair = PairClass.of(_load_subgroup(group, s["H"], "H"), _load_subgroup(group, s["Hhat"], "Hhat"))
        except KeyError as exc:
            raise ValidationError(f"stratum {i} is missing {exc}") from None
        if "chi_quotient" in s:
            records.append(StratumRecord(m, pair, int(s["chi_quotient"])))
        elif "chi_total" in s:
            records.append(stratum_from_total_euler(m, pair, int(s["chi_total"])))
        else:
            raise ValidationError(f'stratum {i} needs "chi_quotient" or "chi_total"')
    return ResolutionData(group.lattice(), records)


def strata_to_json(data: ResolutionData) -> dict:
    return {"group": data.lattice.group.ref,
            "strata": [{"m": s.m, "H": list(s.pair.H.members), "Hhat": list(s.pair.Hhat.members),
                        "chi_quotient": s.chi_quotient} for s in data.strata]}


def burnside_from_json(lattice, data):
    if all(isinstance(v, int) for v in data.values()):
        return BurnsideElement.from_mapping(lattice, data)
    c = [Fraction(0)] * len(lattice)
    for key, val in data.items():
        c[lattice.resolve(key).index] += Fraction(val)
    return RationalBurnside(lattice, c)


def series_from_json(lattice, data) -> BurnsideSeries:
    return BurnsideSeries(lattice, [BurnsideElement.from_mapping(lattice, c) for c in data])


def factorization_from_json(data, lattice=None) -> CyclotomicFactorization:
    exps = {}
    for f in data["factors"]:
        e = f["exponent"]
        if isinstance(e, dict):
            if lattice is None:
                raise ValidationError("Burnside exponents need a group")
            e = burnside_from_json(lattice, e)
        elif isinstance(e, str):
            e = Fraction(e)
        exps[int(f["m"])] = e
    return CyclotomicFactorization(exps, lattice=lattice)


def rational_form_from_json(lattice, h, data) -> RationalCoefficientFunction:
    coeffs = [RationalFunction()] * len(lattice)
    for key, val in data.items():
        coeffs[lattice.resolve(key).index] = RationalFunction.from_json(val)
    return RationalCoefficientFunction(lattice, lattice.resolve(h).index, tuple(coeffs))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
