"""Rebuild the worked example: elimination tree, backbone U and degree-3 tree T."""

from lowdeg import Ordering, augment, build_backbone, elimination_tree, verify_augmentation
from lowdeg.generators import figure1

G = figure1()
L = Ordering.natural(G.n)
S = elimination_tree(G, L)
U = build_backbone(G, L)
A = augment(G, L)

print("S (parent child):", sorted((p, v) for v, p in enumerate(S.parent) if p is not None))
print("U:", sorted(U.edges))
print("T:", sorted(A.F))
print("new edges with origin:", A.F_new)
for r in (1, 2):
    rep = verify_augmentation(G, L, A, r=r, budget=1_000_000)
    print(f"r={r}: adm_r(G+F)={rep.adm} (exact={rep.adm_exact}), col_2r(G)={rep.col_2r}, bound={rep.bound}")
