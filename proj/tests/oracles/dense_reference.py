# Independent numpy reference used to freeze the expected values in the C++
# tests (dense graph-state vectors, explicit partial traces, networkx atlas for
# the n <= 7 isomorphism classes). Run: python3 tests/oracles/dense_reference.py
import itertools, numpy as np, networkx as nx
from fractions import Fraction
def state(n, edges):
    idx=np.arange(2**n)
    bits=[(idx>>(n-1-q))&1 for q in range(n)]
    ph=np.zeros(2**n,dtype=int)
    for u,v in edges: ph+=bits[u]*bits[v]
    return ((-1.0)**ph)/2**(n/2)
def purity(psi,n,B):
    A=[q for q in range(n) if q not in B]
    t=psi.reshape([2]*n).transpose(list(B)+A).reshape(2**len(B),2**len(A))
    rho=t@t.T
    return float((rho**2).sum())
def ce(n,edges,s=None):
    s=list(range(n)) if s is None else s
    psi=state(n,edges); tot=0.0
    for r in range(len(s)+1):
        for a in itertools.combinations(s,r):
            tot+=purity(psi,n,list(a))
    return Fraction(1-tot/2**len(s)).limit_denominator(1<<20)
print("linear4", ce(4,[(0,1),(1,2),(2,3)]))
print("snow2 core", ce(4,[(0,1),(0,2),(1,3)],[0,1]), "pend", ce(4,[(0,1),(0,2),(1,3)],[2,3]))
no13=[(0,1),(1,2),(2,3),(3,4),(2,5)]
print("no13", ce(6,no13))
atlas=nx.graph_atlas_g()
for n in range(1,8):
    gs=[g for g in atlas if g.number_of_nodes()==n and nx.is_connected(g)]
    vals=[ce(n,list(g.edges())) for g in gs]
    mx=1-Fraction(sum(Fraction(1,2**min(j,n-j))*__import__('math').comb(n,j) for j in range(n+1)),2**n)
    print(n,len(gs),"distinct",len(set(vals)),"max_achievers",sum(v==mx for v in vals), "min", min(vals), "max", max(vals))
for n in range(3,10):
    lin=[(i,i+1) for i in range(n-1)]
    print("ring/linear",n,ce(n,lin+[(n-1,0)]),ce(n,lin))
