import itertools
sizes=[1,2,3]
maps=[]
for a in sizes:
    for b in sizes:
        for imgs in itertools.product(range(b),repeat=a-1):
            maps.append((a,b,(0,)+imgs))
def name(m):
    a,b,f=m
    if a==b and f==tuple(range(a)): return f"id_S{a}"
    return f"f{a}{b}_"+"".join(map(str,f[1:])) if a>1 else f"z{a}{b}"
out=["# pointed sets with 1, 2 and 3 elements, base point 0","category P3"]
out+= [f"object S{a}" for a in sizes]
for m in maps:
    if not name(m).startswith("id_"): out.append(f"morphism {name(m)} : S{m[0]} -> S{m[1]}")
for f in maps:
    for g in maps:
        if f[1]!=g[0]: continue
        if name(f).startswith("id_") or name(g).startswith("id_"): continue
        h=(f[0],g[1],tuple(g[2][x] for x in f[2]))
        out.append(f"compose {name(g)} . {name(f)} = {name(h)}")
print("\n".join(out))
