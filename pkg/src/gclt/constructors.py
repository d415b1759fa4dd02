"""
Deterministic builders for the group families used throughout the package.

Every builder fixes a canonical element numbering, so the same arguments
always give the same Cayley table, and records its spec string.
"""

from collections import deque
from typing import List, Optional, Sequence, Tuple, Union

import logfire
import numpy as np
from sympy import Matrix, isprime
from sympy.combinatorics import Permutation

from .config import check_order
from .errors import ParameterConditionError
from .group_core import FiniteGroup, center, quotient, _subgroup

PermutationLike = Union[Sequence[int], Permutation]


def _top_level(spec: str, symbols: str) -> bool:
    depth = 0
    for ch in spec:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and ch in symbols:
            return True
    return False


def operand(spec: Optional[str], op: str) -> str:
    """Render a factor of a product, bracketing it when needed."""
    text = spec if spec is not None else "?"
    wrap = _top_level(text, "o") if op == "x" else _top_level(text, "xo")
    return f"({text})" if wrap else text


def _require_positive(value: int, name: str) -> int:
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool) or value < 1:
        raise ParameterConditionError(f"{name} must be a positive integer, got {value!r}", f"{name} >= 1")
    return int(value)


def render_matrix(M: Sequence[Sequence[int]]) -> str:
    return "[" + ";".join(",".join(str(int(v)) for v in row) for row in M) + "]"


def render_permutation(perm: Sequence[int]) -> str:
    cycles = Permutation(list(perm)).cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(i + 1) for i in cycle) + ")" for cycle in cycles)


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], "C1")


def cyclic(n: int) -> FiniteGroup:
    """C_n: addition mod n, element 1 generates."""
    n = _require_positive(n, "n")
    check_order(n)
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, f"C{n}")


def abelian(parts: Sequence[int]) -> FiniteGroup:
    """Direct sum of cyclic groups with mixed-radix element indices.

    Args:
        parts: Orders of the cyclic factors, first factor most significant

    Returns:
        The abelian group, spec "A<n1>x<n2>x..."
    """
    if not parts:
        raise ParameterConditionError("abelian() needs at least one cyclic factor", "parts nonempty")
    radix = tuple(_require_positive(p, "part") for p in parts)
    order = int(np.prod(radix))
    check_order(order)

    coords = np.array(np.unravel_index(np.arange(order), radix))
    radix_col = np.array(radix)[:, None, None]
    summed = (coords[:, :, None] + coords[:, None, :]) % radix_col
    table = np.ravel_multi_index(tuple(summed), radix)
    return FiniteGroup(table, "A" + "x".join(str(p) for p in radix))


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with (g, h) at index g*|H| + h."""
    order = G.order * H.order
    check_order(order, "direct product")
    m = H.order
    idx = np.arange(order)
    gi, hi = idx // m, idx % m
    table = G.table[gi[:, None], gi[None, :]] * m + H.table[hi[:, None], hi[None, :]]
    return FiniteGroup(table, f"{operand(G.spec, 'x')}x{operand(H.spec, 'x')}")


def metacyclic(m: int, n: int, r: int) -> FiniteGroup:
    """The split metacyclic group <a, b | a^m = b^n = e, b a b^-1 = a^r>.

    Element a^i b^j has index i + m*j and
    (i, j)(i', j') = (i + r^j i' mod m, j + j' mod n).

    Raises:
        ParameterConditionError: If r^n is not 1 mod m
    """
    m = _require_positive(m, "m")
    n = _require_positive(n, "n")
    if not isinstance(r, (int, np.integer)) or r < 0:
        raise ParameterConditionError(f"r must be a non-negative integer, got {r!r}", "r >= 0")
    r = int(r)
    if pow(r, n, m) != 1 % m:
        raise ParameterConditionError(
            f"metacyclic({m},{n},{r}) does not exist", f"r^n = 1 (mod m): {r}^{n} mod {m} = {pow(r, n, m)}"
        )
    order = m * n
    check_order(order)

    idx = np.arange(order)
    i, j = idx % m, idx // m
    r_pow = np.array([pow(r, k, m) for k in range(n)], dtype=np.int64)
    first = (i[:, None] + r_pow[j][:, None] * i[None, :]) % m
    second = (j[:, None] + j[None, :]) % n
    return FiniteGroup(first + m * second, f"M({m},{n},{r})")


def dihedral(n: int) -> FiniteGroup:
    """D_n of order 2n, rotations a^i at indices 0..n-1."""
    n = _require_positive(n, "n")
    if n < 2:
        raise ParameterConditionError(f"dihedral({n}) is not defined", "n >= 2")
    return metacyclic(n, 2, n - 1).with_spec(f"D{n}")


def dicyclic(n: int) -> FiniteGroup:
    """Dic_n of order 4n: <a, x | a^2n = e, x^2 = a^n, x a x^-1 = a^-1>.

    Element a^i x^j has index i + 2n*j.
    """
    n = _require_positive(n, "n")
    if n < 2:
        raise ParameterConditionError(f"dicyclic({n}) is not defined", "n >= 2")
    m = 2 * n
    order = 2 * m
    check_order(order)

    idx = np.arange(order)
    i, j = idx % m, idx // m
    sign = np.where(j == 1, -1, 1)
    exponent = i[:, None] + sign[:, None] * i[None, :]
    wraps = (j[:, None] + j[None, :]) == 2
    exponent = (exponent + np.where(wraps, n, 0)) % m
    table = exponent + m * ((j[:, None] + j[None, :]) % 2)
    return FiniteGroup(table, f"Dic{n}")


def _two_power_exponent(value: int, minimum: int, family: str) -> int:
    value = _require_positive(value, "order")
    k = value.bit_length() - 1
    if value != 1 << k or k < minimum:
        raise ParameterConditionError(
            f"{family}({value}) is not defined", f"order is 2^k with k >= {minimum}"
        )
    return k


def semidihedral(two_power: int) -> FiniteGroup:
    """SD_{2^k} = metacyclic(2^(k-1), 2, 2^(k-2) - 1), k >= 4."""
    k = _two_power_exponent(two_power, 4, "semidihedral")
    return metacyclic(2 ** (k - 1), 2, 2 ** (k - 2) - 1).with_spec(f"SD{two_power}")


def generalized_quaternion(two_power: int) -> FiniteGroup:
    """Q_{2^k} = dicyclic(2^(k-2)), k >= 3."""
    k = _two_power_exponent(two_power, 3, "generalized_quaternion")
    return dicyclic(2 ** (k - 2)).with_spec(f"Q{two_power}")


def _matrix_power_mod(M: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.eye(M.shape[0], dtype=np.int64)
    for _ in range(e):
        result = (result @ M) % p
    return result


def elementary_semidirect(p: int, k: int, M: Sequence[Sequence[int]], m: int) -> FiniteGroup:
    """(C_p)^k x| C_m where the generator of C_m acts as the matrix M.

    Element (v, j) has index idx(v) + p^k * j, vectors in mixed radix, and
    (v, j)(v', j') = (v + M^j v', j + j').

    Raises:
        ParameterConditionError: If p is not prime, M is singular mod p or M^m != I
    """
    p = _require_positive(p, "p")
    k = _require_positive(k, "k")
    m = _require_positive(m, "m")
    if not isprime(p):
        raise ParameterConditionError(f"{p} is not prime", "p prime")

    matrix = np.array(M, dtype=np.int64)
    if matrix.shape != (k, k):
        raise ParameterConditionError(f"matrix has shape {matrix.shape}", f"M is {k}x{k}")
    matrix %= p
    if Matrix(matrix.tolist()).det() % p == 0:
        raise ParameterConditionError(f"matrix {render_matrix(matrix)} is singular", "M invertible over F_p")
    if not np.array_equal(_matrix_power_mod(matrix, m, p), np.eye(k, dtype=np.int64)):
        raise ParameterConditionError(f"matrix {render_matrix(matrix)} has M^{m} != I", "M^m = I over F_p")

    size = p**k
    order = size * m
    check_order(order)

    radix = (p,) * k
    coords = np.array(np.unravel_index(np.arange(size), radix))
    addition = np.ravel_multi_index(tuple((coords[:, :, None] + coords[:, None, :]) % p), radix)
    action = np.empty((m, size), dtype=np.int64)
    power = np.eye(k, dtype=np.int64)
    for j in range(m):
        action[j] = np.ravel_multi_index(tuple((power @ coords) % p), radix)
        power = (power @ matrix) % p

    idx = np.arange(order)
    v, j = idx % size, idx // size
    moved = action[j[:, None], v[None, :]]
    table = addition[v[:, None], moved] + size * ((j[:, None] + j[None, :]) % m)
    return FiniteGroup(table, f"E({p},{k},{render_matrix(matrix)},{m})")


def _array_form(perm: PermutationLike, degree: int) -> Tuple[int, ...]:
    if isinstance(perm, Permutation):
        values = list(perm.array_form) + list(range(perm.size, degree))
    else:
        values = [int(v) for v in perm]
    if sorted(values) != list(range(degree)):
        raise ParameterConditionError(f"{values} is not a permutation of degree {degree}", "generator permutes 0..degree-1")
    return tuple(values)


def from_permutations(degree: int, generators: Sequence[PermutationLike]) -> FiniteGroup:
    """The permutation group generated by generators.

    Elements are numbered in breadth-first order from the identity, products
    apply the left factor first.

    Raises:
        BoundExceededError: If the generated group is larger than the bound
    """
    degree = _require_positive(degree, "degree")
    gens = [_array_form(g, degree) for g in generators]

    identity = tuple(range(degree))
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    with logfire.span("Generating permutation group", degree=degree, generators=len(gens)):
        while queue:
            x = queue.popleft()
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in index:
                    check_order(len(elements) + 1, "permutation group")
                    index[y] = len(elements)
                    elements.append(y)
                    queue.append(y)

    perms = np.array(elements, dtype=np.int64)
    count = len(elements)
    # composed[x, y, i] = y(x(i))
    composed = perms[np.arange(count)[None, :, None], perms[:, None, :]].reshape(-1, degree)
    _, codes = np.unique(np.vstack([perms, composed]), axis=0, return_inverse=True)
    codes = np.asarray(codes).ravel()
    element_of_code = np.empty(int(codes.max()) + 1, dtype=np.int64)
    element_of_code[codes[:count]] = np.arange(count)
    table = element_of_code[codes[count:]].reshape(count, count)

    rendered = ",".join(render_permutation(g) for g in gens) if gens else "()"
    return FiniteGroup(table, f"P({degree};{rendered})")


def _central_involution(G: FiniteGroup) -> int:
    Z = center(G)
    involutions = [z for z in Z.elements if G.element_orders[z] == 2]
    if len(involutions) != 1:
        raise ParameterConditionError(
            f"{G.spec or 'group'} has {len(involutions)} central involutions",
            "exactly one central involution in each factor",
        )
    return involutions[0]


def central_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H modulo the diagonal of the unique central involutions."""
    z, w = _central_involution(G), _central_involution(H)
    product = direct_product(G, H)
    diagonal = _subgroup(product, [0, z * H.order + w])
    spec = f"{operand(G.spec, 'o')}o{operand(H.spec, 'o')}"
    return quotient(product, diagonal).with_spec(spec)


def products(factors: Sequence[FiniteGroup]) -> FiniteGroup:
    """Left-associated direct product of one or more groups."""
    if not factors:
        raise ParameterConditionError("product of no factors", "at least one factor")
    result = factors[0]
    for factor in factors[1:]:
        result = direct_product(result, factor)
    return result


def companion_matrix_of_order(p: int, q: int) -> Optional[List[List[int]]]:
    """The first matrix [[0, -1], [1, t]] of multiplicative order q over F_p."""
    for t in range(p):
        matrix = np.array([[0, (-1) % p], [1, t]], dtype=np.int64)
        if np.array_equal(matrix, np.eye(2, dtype=np.int64)):
            continue
        if np.array_equal(_matrix_power_mod(matrix, q, p), np.eye(2, dtype=np.int64)):
            return matrix.tolist()
    return None
