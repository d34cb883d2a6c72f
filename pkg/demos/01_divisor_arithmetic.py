"""Divisor-class arithmetic on the registered rational surfaces.

Walks through the exact-lattice layer: intersection numbers, degree and
adjunction genus, anticanonical twists, descents C - H, and the
general-position effectiveness heuristic, all on the Bordiga surface's
eight classes of (10,6) curves.
"""

from glicci import DivisorClass, bordiga_ten_six, surface

bordiga = surface("bordiga")
print(bordiga)
print(f"H = {bordiga.H}, K = {bordiga.K}")
print()

# The eight divisor classes of (10,6) curves, up to permutation of the
# ten blown-up points.  Degree is C.H; genus comes from adjunction,
# 2g - 2 = C.C + C.K.
print("the eight (10,6) classes and their descents:")
for i, cls in enumerate(bordiga_ten_six(), start=1):
    d, g = bordiga.degree_of(cls), bordiga.genus_of(cls)
    down = bordiga.subtract_hyperplanes(cls)
    verdict = "effective" if bordiga.is_effective_general(down) else "not effective"
    print(f"  D{i} = {str(cls):14}  ({d},{g})   D{i}-H = {str(down):14}  {verdict}")
print()

# The arithmetically Gorenstein divisor 3H - K has degree 20 and pairs
# the classes off: the complement of each D_i is again one of the eight.
ag = bordiga.ag_class(3)
print(f"3H - K = {ag}, degree {bordiga.degree_of(ag)}")
classes = bordiga_ten_six()
canon = [bordiga.canonical(c) for c in classes]
for i, cls in enumerate(classes, start=1):
    j = canon.index(bordiga.canonical(ag - cls)) + 1
    print(f"  (3H-K) - D{i} = D{j}")
print()

# D3 - H has a negative multiplicity: the heuristic splits off the
# exceptional line first and tests the plane part.
d3_down = bordiga.subtract_hyperplanes(classes[2])
core, excess = bordiga.exceptional_split(d3_down)
print(f"D3 - H = {d3_down} splits as {core} plus E{excess[0][0]}")
print(f"degrees: {bordiga.degree_of(d3_down)} = "
      f"{bordiga.degree_of(core)} + 1 (a plane cubic and a skew line)")
print()

# The same machinery runs on an abstract lattice: the degree-10 surface
# has class group generated by H and K with a declared pairing.
det10 = surface("det10")
C = det10.H + det10.K
print(det10)
print(f"C = H + K: degree {det10.degree_of(C)}, genus {det10.genus_of(C)}, "
      f"C^2 = {det10.self_intersection(C)}")
Cp = 4 * det10.H - 2 * DivisorClass((0, 1))
print(f"C' = 4H - 2K: degree {det10.degree_of(Cp)}, genus {det10.genus_of(Cp)}, "
      f"C'^2 = {det10.self_intersection(Cp)}")
