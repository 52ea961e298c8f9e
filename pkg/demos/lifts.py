#!/usr/bin/env python3
"""Cyclic lifts from a few lines of text.

Writes a small lift description, lifts it, checks parameters, confirms the
fibre rotation is an automorphism and prints the result as DOT.
"""

from __future__ import annotations

from mixedcages import canonical_form, lift, verify
from mixedcages.constructions import builtin_lift_spec, fibre_rotation
from mixedcages.formats import emit_dot, emit_lift_spec, parse_lift_spec

# edges i ~ i+1 and arcs i -> i+7, i -> i+8 over Z_19
text = """\
m 19
node
self 1 e
self 7 a
self 8 a
"""
spec = parse_lift_spec(text)
G = lift(spec)
v = verify(G)
print(f"order {v.order}, r={v.r} z={v.z} girth={v.girth}")

rot = fibre_rotation(spec)
assert G.relabel(rot) == G
assert canonical_form(G.relabel(rot)) == canonical_form(G)

# the built-in order-48 lift, as text
print(emit_lift_spec(builtin_lift_spec("lift416")))
# DOT: one node line per vertex, then edges (dir=none) and arcs
dot = emit_dot(G).splitlines()
print("\n".join(dot[:1] + dot[G.n + 1:G.n + 4] + dot[-4:]))
