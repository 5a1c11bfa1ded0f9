"""Clasper configurations over a standard Seifert surface of the unknot.

The surface of genus g carries 2g bands; bands 2i and 2i+1 are the dual
pair of handle i.  Leaves of claspers are 0/+-1-framed band meridians,
and every edge carries an integer surface winding (its algebraic
intersection count with the surface, oriented away from the internal
vertex) plus a half-twist flag.

Two shapes of total degree two are evaluated: the wheel (one degree-2
clasper: two vertices joined by two beaded edges, one leaf at each
vertex) and a pair of degree-1 Y-claspers.  Complete contraction sums
over all perfect matchings of the leaf legs; a glued edge carries the
equivariant linking bead of its two leaves shifted by the leg windings,
matchings with a vanishing bead die, and each resulting closed graph is
normalized through the diagrams module.  The one sign convention not
fixed by internal consistency (the relative weight of eyes-shaped
matchings) is set to +1 here and calibrated so that the wheel with
windings (n, m) contracts to project((t1 - 1) t2^n t3^m).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SeifertQError, UnsupportedDegreeError
from .laurent import LaurentPoly
from .ltheta import ThetaElement, generator_element, realize_decompose
from .diagrams import eyes_value, theta_value


@dataclass(frozen=True)
class StandardSurface:
    """Standard genus-g Seifert surface of the unknot; bands 2i, 2i+1 dual."""

    genus: int

    def __post_init__(self):
        if self.genus < 1:
            raise SeifertQError("surface genus must be at least 1")

    @property
    def band_count(self):
        return 2 * self.genus

    def check_band(self, band):
        if not 0 <= band < self.band_count:
            raise SeifertQError(
                "band index %d out of range for genus %d" % (band, self.genus)
            )

    def dual_band(self, band):
        self.check_band(band)
        return band ^ 1


@dataclass(frozen=True)
class Leaf:
    """A band meridian with framing 0 or +-1."""

    band: int
    framing: int = 0

    def __post_init__(self):
        if self.framing not in (0, 1, -1):
            raise SeifertQError("leaf framing must be 0 or +-1")


@dataclass(frozen=True)
class WheelClasper:
    """Degree-2 clasper: two vertices, two internal edges, two leaves.

    half_twists flags the (glued leaf edge, first internal edge, second
    internal edge); mirror marks the mirror-image configuration, which
    negates the surgered knot's invariant.
    """

    bands: tuple
    windings: tuple
    half_twists: tuple = (0, 0, 0)
    mirror: bool = False

    degree = 2

    def __post_init__(self):
        if len(self.bands) != 2 or len(self.windings) != 2:
            raise SeifertQError("wheel clasper needs two bands and two windings")
        if len(self.half_twists) != 3:
            raise SeifertQError("wheel clasper carries three half-twist flags")


@dataclass(frozen=True)
class YClasper:
    """Degree-1 clasper: one vertex with three leaf legs, listed in the
    fixed cyclic order of the vertex."""

    bands: tuple
    windings: tuple = (0, 0, 0)
    framings: tuple = (0, 0, 0)
    half_twists: tuple = (0, 0, 0)

    degree = 1

    def __post_init__(self):
        if len(self.bands) != 3:
            raise SeifertQError("Y-clasper has exactly three leaves")
        for name in ("windings", "framings", "half_twists"):
            if len(getattr(self, name)) != 3:
                raise SeifertQError("Y-clasper %s must have three entries" % name)
        for f in self.framings:
            if f not in (0, 1, -1):
                raise SeifertQError("leaf framing must be 0 or +-1")

    def leaves(self):
        return tuple(Leaf(b, f) for b, f in zip(self.bands, self.framings))


@dataclass(frozen=True)
class YPair:
    """An ordered pair of disjoint Y-claspers; total degree two."""

    first: YClasper
    second: YClasper

    degree = 2


def equivariant_lk(l1, l2, surface):
    """Equivariant linking number of two band meridians.

    Dual bands give t - 1 (lower band index first; the reversed order
    is the bar image t^-1 - 1); any other pair of meridians, including
    parallel copies on one band, bounds disjoint lifted disks and gives
    zero.
    """
    surface.check_band(l1.band)
    surface.check_band(l2.band)
    if l1.band == l2.band:
        return LaurentPoly.zero()
    if l1.band ^ 1 != l2.band:
        return LaurentPoly.zero()
    if l1.band < l2.band:
        return LaurentPoly({1: 1, 0: -1})
    return LaurentPoly({-1: 1, 0: -1})


def contract(spec, surface):
    """Complete contraction of a total-degree-2 configuration."""
    specs = _flatten(spec)
    total = sum(s.degree for s in specs)
    if total != 2:
        raise UnsupportedDegreeError(
            "contraction implemented for total degree 2, got %d" % total
        )
    if len(specs) == 1:
        single = specs[0]
        if isinstance(single, WheelClasper):
            return _contract_wheel(single, surface)
        raise UnsupportedDegreeError(
            "a single clasper must be a wheel, got %r" % (single,)
        )
    return _contract_y_pair(specs[0], specs[1], surface)


def _flatten(spec):
    if isinstance(spec, YPair):
        return [spec.first, spec.second]
    if isinstance(spec, (WheelClasper, YClasper)):
        return [spec]
    out = []
    for item in spec:
        out.extend(_flatten(item))
    return out


def _contract_wheel(wheel, surface):
    bead = equivariant_lk(Leaf(wheel.bands[0]), Leaf(wheel.bands[1]), surface)
    if wheel.half_twists[0]:
        bead = bead.bar()
    internal = []
    for winding, twist in zip(wheel.windings, wheel.half_twists[1:]):
        mono = LaurentPoly.t(winding)
        internal.append(mono.bar() if twist else mono)
    return theta_value(bead, internal[0], internal[1])


def _contract_y_pair(y1, y2, surface):
    legs = [("u", i) for i in range(3)] + [("v", i) for i in range(3)]
    data = {"u": y1, "v": y2}
    total = ThetaElement.zero()
    for matching in _pairings(legs):
        cross = []
        loops = {"u": None, "v": None}
        for (sa, ia), (sb, ib) in matching:
            if sa == sb:
                loops[sa] = (ia, ib)
            else:
                # orient composite edges from the first clasper to the second
                if sa == "v":
                    sa, ia, sb, ib = sb, ib, sa, ia
                cross.append((ia, ib))
        beads = []
        dead = False
        for pair in cross:
            bead = _composite_bead(data["u"], pair[0], data["v"], pair[1], surface)
            if not bead:
                dead = True
                break
            beads.append(bead)
        if dead:
            continue
        if len(cross) == 3:
            total = total + theta_value(beads[0], beads[1], beads[2])
        else:
            loop_u = _loop_bead(data["u"], loops["u"], surface)
            loop_v = _loop_bead(data["v"], loops["v"], surface)
            if loop_u and loop_v:
                total = total + eyes_value(loop_u, loop_v, beads[0])
    return total


def _composite_bead(ya, leg_a, yb, leg_b, surface):
    """Bead on a glued edge running through leg_a of ya into leg_b of yb."""
    lk = equivariant_lk(ya.leaves()[leg_a], yb.leaves()[leg_b], surface)
    if not lk:
        return lk
    bead = lk.shift(ya.windings[leg_a] - yb.windings[leg_b])
    if (ya.half_twists[leg_a] + yb.half_twists[leg_b]) % 2:
        bead = bead.bar()
    return bead


def _loop_bead(y, pair, surface):
    out_leg, in_leg = pair
    lk = equivariant_lk(y.leaves()[out_leg], y.leaves()[in_leg], surface)
    if not lk:
        return lk
    bead = lk.shift(y.windings[out_leg] - y.windings[in_leg])
    if (y.half_twists[out_leg] + y.half_twists[in_leg]) % 2:
        bead = bead.bar()
    return bead


def _pairings(items):
    if not items:
        yield []
        return
    first = items[0]
    rest = items[1:]
    for i, other in enumerate(rest):
        head = (first, other)
        for tail in _pairings(rest[:i] + rest[i + 1 :]):
            yield [head] + tail


def q_surgery(specs, surface):
    """The two-loop invariant of the knot surgered along the listed
    wheel claspers, interpreted as a connected sum.

    Each wheel contributes minus its contraction (surgery on the unknot
    flips the sign of the alternating-sum bracket); a mirrored wheel
    contributes the negative of that.  The result always has
    augmentation 0.
    """
    total = ThetaElement.zero()
    for pos, spec in enumerate(specs):
        if not isinstance(spec, WheelClasper):
            raise SeifertQError(
                "q_surgery supports wheel claspers only; entry %d is %r"
                % (pos, spec)
            )
        value = contract(spec, surface)
        total = total + (value if spec.mirror else -value)
    return total


def realize_claspers(target, surface):
    """Wheel claspers whose combined surgery realizes a kernel element.

    Each generator multiple (c, n, m) from the telescoping decomposition
    becomes |c| wheels with windings (n, m) on the first dual band pair;
    positive multiples use the mirror orientation since a plain wheel
    realizes the negative generator.
    """
    decomposition = realize_decompose(target)
    specs = []
    for c, n, m in decomposition:
        wheel = WheelClasper(bands=(0, 1), windings=(n, m), mirror=c > 0)
        specs.extend([wheel] * abs(c))
    return specs


def wheel_value(n, m):
    """The contraction of the plain wheel: project((t1-1) t2^n t3^m)."""
    return generator_element(n, m)


def clasper_to_json_obj(spec):
    if isinstance(spec, WheelClasper):
        return {
            "shape": "wheel",
            "bands": list(spec.bands),
            "windings": list(spec.windings),
            "half_twists": list(spec.half_twists),
            "mirror": spec.mirror,
        }
    if isinstance(spec, YPair):
        return {
            "shape": "y_pair",
            "ys": [
                {
                    "bands": list(y.bands),
                    "windings": list(y.windings),
                    "framings": list(y.framings),
                    "half_twists": list(y.half_twists),
                }
                for y in (spec.first, spec.second)
            ],
        }
    raise SeifertQError("cannot serialize clasper %r" % (spec,))


def claspers_to_json_obj(surface, specs):
    return {
        "surface_genus": surface.genus,
        "claspers": [clasper_to_json_obj(s) for s in specs],
    }


def _winding(value):
    # windings may be written as an integer or as a list of segment
    # counts; a subdivided edge contributes the sum of its segments
    if isinstance(value, list):
        return sum(int(v) for v in value)
    return int(value)


def claspers_from_json_obj(obj):
    """Parse a clasper file object into (surface, list of specs)."""
    if not isinstance(obj, dict) or "surface_genus" not in obj:
        raise SeifertQError("expected an object with a 'surface_genus' field")
    surface = StandardSurface(int(obj["surface_genus"]))
    specs = []
    for pos, entry in enumerate(obj.get("claspers", [])):
        shape = entry.get("shape")
        if shape == "wheel":
            spec = WheelClasper(
                bands=tuple(int(b) for b in entry["bands"]),
                windings=tuple(_winding(w) for w in entry["windings"]),
                half_twists=tuple(int(h) for h in entry.get("half_twists", (0, 0, 0))),
                mirror=bool(entry.get("mirror", False)),
            )
        elif shape == "y_pair":
            ys = entry.get("ys", ())
            if len(ys) != 2:
                raise SeifertQError("y_pair entry %d needs exactly two claspers" % pos)
            pair = []
            for y in ys:
                pair.append(
                    YClasper(
                        bands=tuple(int(b) for b in y["bands"]),
                        windings=tuple(_winding(w) for w in y.get("windings", (0, 0, 0))),
                        framings=tuple(int(f) for f in y.get("framings", (0, 0, 0))),
                        half_twists=tuple(int(h) for h in y.get("half_twists", (0, 0, 0))),
                    )
                )
            spec = YPair(pair[0], pair[1])
        else:
            raise SeifertQError("clasper entry %d has unknown shape %r" % (pos, shape))
        for band in _bands_of(spec):
            surface.check_band(band)
        specs.append(spec)
    return surface, specs


def _bands_of(spec):
    if isinstance(spec, WheelClasper):
        return spec.bands
    return spec.first.bands + spec.second.bands
