"""The cubic theta function a(q) by three routes, and quaternary counts.

a(q) sums q^(n^2+nm+m^2) over the hexagonal lattice.  The same coefficients
arrive via a Lambert series and via an eta quotient; the package checks all
three against each other, and derives representation counts of the doubled
form from the self-convolution.
"""

from sptlab import R_closed, a_eta, a_lambert, a_lattice, lattice_table, p3_convolution, sigma

N = 20

print("== three routes to the same coefficients ==")
lat, lam, eta = a_lattice(N), a_lambert(N), a_eta(N)
print(" k  lattice  lambert  eta")
for k in range(N + 1):
    print("%3d %8d %8d %4d" % (k, lat[k], lam[k], eta[k]))
assert lat.equal_up_to(lam, N) is None and lat.equal_up_to(eta, N) is None

print()
print("== quaternary form counts R(k) and the divisor closed form ==")
table = lattice_table(N)
print(" k   R(k)   12*sigma(k) - 36*sigma(k/3)")
for k in range(1, N + 1):
    print("%3d %6d %10d" % (k, table.R[k], R_closed(k)))

print()
print("== convolution with partitions into multiples of 3 ==")
print(" n   P3(n)   P3(n)/12 when n is not a multiple of 3")
for n in range(1, 13):
    p3n = p3_convolution(n, table)
    extra = f"   -> {p3n // 12}" if n % 3 else ""
    print("%3d %7d%s" % (n, p3n, extra))
print("(off multiples of 3, P3(n)/12 reproduces the restricted spt values)")
