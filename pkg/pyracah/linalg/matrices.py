"""
Dense matrices with exact rational entries.

Matrices act on column vectors: the j-th column of a matrix holds the
coordinates of the image of the j-th basis vector. Products and
elimination are delegated to sympy's DomainMatrix over QQ; RatMatrix only
keeps the entries as Fractions so that they hash and print canonically.

@author : davidrpugh

"""
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . rationals import common_denominator, from_qq, to_qq, to_rational


class RatMatrix(object):
    """
    Immutable dense matrix of exact rationals.

    Attributes
    ----------
    rows : tuple(tuple(Fraction))
        Entries in row-major order.
    shape : tuple(int, int)
        Number of rows and columns.

    """

    __slots__ = ('_domain', '_rows', '_shape')

    def __init__(self, rows, ncols=None):
        """
        Initialize an instance of the RatMatrix class.

        Parameters
        ----------
        rows : iterable(iterable)
            Entries, anything accepted by `to_rational`.
        ncols : int, optional(default=None)
            Number of columns. Only needed for matrices with no rows.

        """
        entries = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        self._rows = self._validate(entries, ncols)
        self._shape = (len(entries), ncols)
        self._domain = None

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]"
                         for row in self._rows)
        return "RatMatrix([{}])".format(body)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._shape == other._shape and self._rows == other._rows

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._shape, self._rows))

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def __neg__(self):
        return RatMatrix(((-x for x in row) for row in self._rows), self.ncols)

    def __add__(self, other):
        self._check_same_shape(other)
        return RatMatrix(((x + y for x, y in zip(r, s))
                          for r, s in zip(self._rows, other._rows)), self.ncols)

    def __sub__(self, other):
        self._check_same_shape(other)
        return RatMatrix(((x - y for x, y in zip(r, s))
                          for r, s in zip(self._rows, other._rows)), self.ncols)

    def __mul__(self, scalar):
        if isinstance(scalar, RatMatrix):
            return self.__matmul__(scalar)
        scalar = to_rational(scalar)
        return RatMatrix(((scalar * x for x in row) for row in self._rows),
                         self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            mesg = "Cannot multiply a {}x{} matrix by a {}x{} matrix."
            raise ValueError(mesg.format(*(self._shape + other._shape)))
        if 0 in self._shape or 0 in other._shape:
            return RatMatrix.zeros(self.nrows, other.ncols)
        return RatMatrix.from_domain(self.to_domain().matmul(other.to_domain()))

    @property
    def columns(self):
        """
        Columns of the matrix.

        :getter: Return the columns as tuples.
        :type: tuple(tuple(Fraction))

        """
        return tuple(zip(*self._rows)) if self._rows else ((),) * self.ncols

    @property
    def is_square(self):
        return self.nrows == self.ncols

    @property
    def ncols(self):
        return self._shape[1]

    @property
    def nrows(self):
        return self._shape[0]

    @property
    def rows(self):
        """
        Rows of the matrix.

        :getter: Return the rows as tuples.
        :type: tuple(tuple(Fraction))

        """
        return self._rows

    @property
    def shape(self):
        return self._shape

    @property
    def T(self):
        """Transpose of the matrix."""
        return RatMatrix(self.columns, self.nrows)

    @staticmethod
    def _validate(entries, ncols):
        """Validate the rows of a matrix."""
        for row in entries:
            if len(row) != ncols:
                mesg = "Ragged rows: expected {} columns but found {}."
                raise ValueError(mesg.format(ncols, len(row)))
        return entries

    def _check_same_shape(self, other):
        if self._shape != other._shape:
            mesg = "Shape mismatch: {} versus {}."
            raise ValueError(mesg.format(self._shape, other._shape))

    @classmethod
    def diagonal(cls, values):
        values = [to_rational(x) for x in values]
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)]
                    for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns, nrows):
        """Assemble a matrix from its columns."""
        columns = [tuple(col) for col in columns]
        return cls(zip(*columns) if columns else [() for _ in range(nrows)],
                   len(columns))

    @classmethod
    def from_domain(cls, matrix):
        """Convert a DomainMatrix over QQ."""
        return cls([[from_qq(x) for x in row] for row in matrix.to_list()],
                   matrix.shape[1])

    @classmethod
    def identity(cls, n):
        return cls.scalar(n, 1)

    @classmethod
    def scalar(cls, n, value):
        return cls.diagonal([value] * n)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    def apply(self, vector):
        """Image of a column vector."""
        vector = tuple(vector)
        if len(vector) != self.ncols:
            mesg = "Vector of length {} does not match {} columns."
            raise ValueError(mesg.format(len(vector), self.ncols))
        column = RatMatrix.from_columns([vector], self.ncols)
        return (self @ column).columns[0]

    def integer_scaled(self):
        """
        Scale the matrix to integer entries.

        Returns
        -------
        scale : int
            Least common multiple of the denominators.
        rows : list(list(int))
            Entries of `scale` times the matrix.

        """
        scale = common_denominator(x for row in self._rows for x in row)
        rows = [[int(x * scale) for x in row] for row in self._rows]
        return scale, rows

    def is_zero(self):
        return all(x == 0 for row in self._rows for x in row)

    def scalar_value(self):
        """Return s if the matrix equals s times the identity, else None."""
        if not self.is_square or self.nrows == 0:
            return None
        value = self._rows[0][0]
        for i, row in enumerate(self._rows):
            for j, x in enumerate(row):
                if x != (value if i == j else 0):
                    return None
        return value

    def shift(self, value):
        """Return the matrix plus `value` times the identity."""
        value = to_rational(value)
        return RatMatrix(((x + value if i == j else x for j, x in enumerate(row))
                          for i, row in enumerate(self._rows)), self.ncols)

    def to_domain(self):
        """
        The same matrix as a sympy DomainMatrix over QQ.

        :type: sympy.polys.matrices.DomainMatrix

        """
        if self._domain is None:
            rows = [[to_qq(x) for x in row] for row in self._rows]
            self._domain = DomainMatrix(rows, self._shape, QQ)
        return self._domain

    def vstack(self, other):
        if self.ncols != other.ncols:
            mesg = "Cannot stack matrices with {} and {} columns."
            raise ValueError(mesg.format(self.ncols, other.ncols))
        return RatMatrix(self._rows + other._rows, self.ncols)


def commutator(x, y):
    """[x, y] = xy - yx."""
    return x @ y - y @ x


def anticommutator(x, y):
    """{x, y} = xy + yx."""
    return x @ y + y @ x
