"""The exact integer kernel underneath everything.

Smith normal forms with verified transforms, saturated kernels, lattice
quotients in canonical form, and functorial exterior powers -- all in
arbitrary-precision integer arithmetic.
"""

from semicoh import (
    charpoly,
    contragredient,
    kernel_basis,
    lattice_quotient,
    smith_normal_form,
    wedge_power,
)
from semicoh.intmat import IntMatrix, det

a = IntMatrix([[6, 4, 2], [4, 6, 4], [2, 4, 6]])
s = smith_normal_form(a)
print("A =", [list(r) for r in a.data])
print("Smith diagonal:", s.diagonal)
print("U A V == D:", (s.u @ a @ s.v) == s.d, "  |det U| = |det V| = 1:",
      abs(det(s.u)) == abs(det(s.v)) == 1)

n = IntMatrix([[1, 1, 0], [0, 0, 2]])
k = kernel_basis(n)
print("\nkernel of", [list(r) for r in n.data], "spanned by columns of",
      [list(r) for r in k.data])

print("\nZ^2 / image of [[-2,-1],[1,-1]] =",
      lattice_quotient(IntMatrix.identity(2), IntMatrix([[-2, -1], [1, -1]])))

rot = IntMatrix([[0, -1], [1, -1]])  # order-3 rotation of the hexagonal lattice
print("\ncharacteristic polynomial of the order-3 rotation:", charpoly(rot))
print("contragredient (inverse transpose):", [list(r) for r in contragredient(rot).data])

b = IntMatrix([[2, 1, 0], [1, 1, 1], [0, 1, 1]])
c = IntMatrix([[1, 0, 1], [0, 1, 0], [1, 1, 1]])
lhs = wedge_power(b @ c, 2)
rhs = wedge_power(b, 2) @ wedge_power(c, 2)
print("\nwedge^2 is functorial:", lhs == rhs)
