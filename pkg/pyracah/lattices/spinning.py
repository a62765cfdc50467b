"""
Spinning vectors into invariant subspaces.

@author : davidrpugh

"""
from .. linalg import RatMatrix, Subspace, kernel, rational_eigenvalues, solve_in_basis


def spin_under(operators, ambient_dim, seeds):
    """
    Smallest subspace containing `seeds` and invariant under `operators`.

    Parameters
    ----------
    operators : sequence(RatMatrix)
    ambient_dim : int
    seeds : iterable(sequence)

    Returns
    -------
    space : Subspace

    """
    space = Subspace(ambient_dim, seeds)
    frontier = list(space.basis.rows)
    while frontier:
        fresh = []
        for vector in frontier:
            for operator in operators:
                residue = space.reduce(operator.apply(vector))
                if any(residue):
                    space = Subspace(ambient_dim, space.basis.rows + (residue,))
                    fresh.append(residue)
        frontier = fresh
    return space


def spin(r, seeds):
    """Racah submodule generated by `seeds` (closure under A, B and C)."""
    return spin_under((r.A, r.B, r.C), r.dim, seeds)


def h_spin(h, seeds):
    """DAHA submodule generated by `seeds` (closure under t0, t1, t0v, t1v)."""
    return spin_under(h.generators, h.dim, seeds)


def restrict(matrix, space):
    """
    Matrix of an operator on an invariant subspace.

    Coordinates are taken with respect to the RREF basis of `space`.

    """
    rows = space.basis.rows
    columns = [solve_in_basis(rows, matrix.apply(row)) for row in rows]
    return RatMatrix.from_columns(columns, len(rows))


def lift(coordinate_space, space):
    """Subspace of the ambient space with the given coordinates in `space`."""
    rows = space.basis.rows
    vectors = [[sum((c * row[k] for c, row in zip(coords, rows)), 0)
                for k in range(space.ambient_dim)]
               for coords in coordinate_space.basis.rows]
    return Subspace(space.ambient_dim, vectors)


def eigenvector_spins(operators, dim):
    """
    Invariant subspaces generated by rational eigenvectors.

    Every rational eigenvector of every operator is spun; dually, every
    rational eigenvector of a transpose is spun under the transposes and
    the annihilator of the result is kept.

    Parameters
    ----------
    operators : sequence(RatMatrix)
    dim : int

    Returns
    -------
    spaces : set(Subspace)

    """
    transposes = [operator.T for operator in operators]
    spaces = set()
    for operator, transpose in zip(operators, transposes):
        for theta, _ in rational_eigenvalues(operator):
            for vector in kernel(operator.shift(-theta)).basis.rows:
                spaces.add(spin_under(operators, dim, [vector]))
            for vector in kernel(transpose.shift(-theta)).basis.rows:
                dual = spin_under(transposes, dim, [vector])
                spaces.add(dual.annihilator())
    return spaces


def find_invariant_subspace(h):
    """
    Exhibit a proper non-zero subspace invariant under t0, t1, t0v, t1v.

    Returns
    -------
    space : Subspace or None
        The smallest such subspace found, or None when every spin of an
        eigenvector is trivial.

    """
    proper = [space for space in eigenvector_spins(h.generators, h.dim)
              if 0 < space.dim < h.dim]
    if not proper:
        return None
    return min(proper, key=lambda space: (space.dim, space.basis.rows))
