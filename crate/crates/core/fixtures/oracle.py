# Independent oracle for fixtures/counts.json: enumerates trusses by backtracking
# over rows of the ∘ table that satisfy the distributive law, with rows of a∘b
# forced by associativity, then counts orbits under Aut(G) and the holomorph.
# Run with `python3 oracle.py`.
import itertools, sys
def cyc(n): return [[(a+b)%n for b in range(n)] for a in range(n)]
def klein(): return [[a^b for b in range(4)] for a in range(4)]
def s3():
    P=sorted(itertools.permutations(range(3)))
    idx={p:i for i,p in enumerate(P)}
    return [[idx[tuple(p[q[x]] for x in range(3))] for q in P] for p in P]
def run(g):
    n=len(g); one=next(e for e in range(n) if all(g[e][x]==x for x in range(n)))
    inv=[next(b for b in range(n) if g[a][b]==one) for a in range(n)]
    # rows r with r(b◇c) = r(b)◇r(1)^-1◇r(c)
    rows=[r for r in itertools.product(range(n),repeat=n)
          if all(r[g[b][c]]==g[g[r[b]][inv[r[one]]]][r[c]] for b in range(n) for c in range(n))]
    rowset=set(rows)
    out=[]
    def prop(asg):
        changed=True
        while changed:
            changed=False
            for a in range(n):
                if asg[a] is None: continue
                for b in range(n):
                    if asg[b] is None: continue
                    z=asg[a][b]; need=tuple(asg[a][asg[b][c]] for c in range(n))
                    if asg[z] is None:
                        if need not in rowset: return False
                        asg[z]=need; changed=True
                    elif asg[z]!=need: return False
        return True
    def rec(asg):
        if not prop(asg): return
        free=[a for a in range(n) if asg[a] is None]
        if not free:
            out.append(tuple(v for r in asg for v in r)); return
        a=free[0]
        for r in rows:
            nxt=list(asg); nxt[a]=r; rec(nxt)
    start=[None]*n
    for r in rows:
        s=list(start); s[one]=r; rec(s)
    res=sorted(set(out))
    assert len(res)==len(out)
    # automorphisms and holomorph by brute force
    perms=list(itertools.permutations(range(n)))
    auts=[f for f in perms if all(f[g[a][b]]==g[f[a]][f[b]] for a in range(n) for b in range(n))]
    hol=[tuple(g[h][f[x]] for x in range(n)) for f in auts for h in range(n)]
    def port(t,f):
        finv=[f.index(i) for i in range(n)]
        return tuple(f[t[finv[a]*n+finv[b]]] for a in range(n) for b in range(n))
    return len(res), [len({min(port(t,f) for f in grp) for t in res}) for grp in (auts,hol)], res
for name,g in [("z1",cyc(1)),("z2",cyc(2)),("z3",cyc(3)),("z4",cyc(4)),("klein4",klein()),("s3",s3())]:
    c,cl,res=run(g); print(name,c,cl, flush=True)
    if name=="z2": print(res)
