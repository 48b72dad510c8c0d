"""
Tranquil labellings on a three-edge hypergraph
==============================================

Three triples A={b,c,d}, B={c,f,g}, C={d,e,f} admit exactly one closed
walk up to rotation and reflection. A labelling family is tranquil when
that walk projects to a bridgeless multigraph on the labels.
"""

from nlcg import ClosedWalk, Hypergraph, LabellingFamily, certify_tranquil, enumerate_closed_walks, project

names = "abcdefg"
v = {x: i for i, x in enumerate(names)}
h = Hypergraph(7, 3, ((v["b"], v["c"], v["d"]), (v["c"], v["f"], v["g"]), (v["d"], v["e"], v["f"])))


def family(spec):
    return LabellingFamily({j: {v[x]: lab for x, lab in spec[j].items()} for j in range(3)})


walks = enumerate_closed_walks(h)
print("closed walks:", [w.format(names.__getitem__, "ABC".__getitem__) for w in walks])

# %%
# The labelling below sends the walk dAcBfCd onto the triangle 1-2-3.
good = family({0: {"b": 1, "c": 2, "d": 3}, 1: {"f": 1, "g": 2, "c": 3}, 2: {"d": 1, "f": 2, "e": 3}})
walk = ClosedWalk((v["d"], v["c"], v["f"]), (0, 1, 2))
print("projection:", project(walk, good, 3).edges)
print(certify_tranquil(h, good))

# %%
# Relabel and the projection becomes 1-2, 1-2, 1-3: the edge 1-3 is a bridge.
bad = family({0: {"c": 2, "d": 1, "b": 3}, 1: {"c": 1, "f": 2, "g": 3}, 2: {"f": 1, "d": 3, "e": 2}})
cert = certify_tranquil(h, bad)
print(cert.verdict, "bridge between labels", cert.bridge_labels)
print("certificate replays:", cert.replay(bad, 3))
