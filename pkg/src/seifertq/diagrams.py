"""Closed beaded trivalent graphs of the two lowest-genus shapes.

There are two connected trivalent graphs with two vertices: the theta
graph (three parallel edges) and the eyes graph (two loops joined by a
middle edge).  Beads are monomials t^k; polynomial beads are expanded
linearly before diagrams are formed (theta_value / eyes_value).  Vertex
orientations follow one global counterclockwise convention, and sign
flips from reversing edges or vertex orientations are applied during
normalization.

The eyes-to-theta identity and the holonomy move are transcribed here
and nowhere else, so the conventions can be audited in one place:

* holonomy_normalize: sliding a trivalent vertex across the spanning
  surface shifts each incident strand's bead by t^+-1; a loop meets its
  vertex in two opposite strands whose shifts cancel, so only the
  middle bead moves and it can always be cleared to 1.
* reduce_eyes: expanding the middle edge regroups the four loop strands
  into two theta graphs; the crossed regrouping reverses one loop,
  which inverts its bead and flips a vertex orientation:
      eyes(a, b | 1)  =  theta(a, b, 1) - theta(a, -b, 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly
from .ltheta import AmbientPoly, ThetaElement, project


@dataclass(frozen=True)
class ThetaDiagram:
    """Theta graph with monomial bead exponents on the three edges."""

    beads: tuple
    coefficient: int = 1

    def __post_init__(self):
        if len(self.beads) != 3:
            raise ValueError("theta diagram carries exactly three beads")


@dataclass(frozen=True)
class EyesDiagram:
    """Two loops (bead exponents loop_beads) joined by a middle edge."""

    loop_beads: tuple
    middle_bead: int = 0
    coefficient: int = 1

    def __post_init__(self):
        if len(self.loop_beads) != 2:
            raise ValueError("eyes diagram carries exactly two loop beads")


def theta_normal_form(d):
    """The value of a theta diagram in the orbit group.

    Permuting the three edges and reversing all of them simultaneously
    are graph automorphisms, which is exactly the orbit identification
    of the value group, so this map is well defined on diagrams.
    """
    a, b, c = d.beads
    return project(AmbientPoly({(a, b, c): d.coefficient}))


def holonomy_normalize(e):
    """Clear the middle bead of an eyes diagram; loop beads stay put."""
    return EyesDiagram(tuple(e.loop_beads), 0, e.coefficient)


def reduce_eyes(e):
    """The value of an eyes diagram, via the middle-edge expansion."""
    e = holonomy_normalize(e)
    a, b = e.loop_beads
    plus = theta_normal_form(ThetaDiagram((a, b, 0), e.coefficient))
    minus = theta_normal_form(ThetaDiagram((a, -b, 0), e.coefficient))
    return plus - minus


def theta_value(bead1, bead2, bead3, coefficient=1):
    """Theta evaluation for polynomial beads, expanded by linearity."""
    amb = AmbientPoly.constant(coefficient)
    for i, bead in enumerate((bead1, bead2, bead3)):
        factor = AmbientPoly(
            {_axis(i, e): c for e, c in bead.sorted_terms()}
        )
        amb = amb * factor
    return project(amb)


def eyes_value(loop1, loop2, middle, coefficient=1):
    """Eyes evaluation for polynomial beads, expanded by linearity.

    Since the reduction is independent of the middle exponent, the
    middle bead only contributes its coefficient sum.
    """
    weight = coefficient * middle.eval_at_one()
    if weight == 0:
        return ThetaElement.zero()
    straight = theta_value(loop1, loop2, LaurentPoly.one(), weight)
    crossed = theta_value(loop1, loop2.bar(), LaurentPoly.one(), weight)
    return straight - crossed


def _axis(i, exponent):
    e = [0, 0, 0]
    e[i] = exponent
    return tuple(e)
