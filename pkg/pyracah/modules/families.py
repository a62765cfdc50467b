"""
Protocols shared by the module families of the catalog.

@author : davidrpugh

"""
from .. algebras import HRep
from .. linalg import RatMatrix
from . specs import module_spec


class FamilyLike(object):
    """
    Class describing the protocol that all module families should satisfy.

    Notes
    -----
    Subclasses should set `name` and implement `build`, `criterion_values`
    and `forbidden_values`.

    """

    name = None

    @classmethod
    def build(cls, d, a, b, c):
        raise NotImplementedError

    @staticmethod
    def criterion_values(a, b, c):
        """Linear forms in (a, b, c) tested by the irreducibility criterion."""
        raise NotImplementedError

    @staticmethod
    def forbidden_values(d):
        """Values the criterion forms must avoid for irreducibility."""
        raise NotImplementedError

    @classmethod
    def is_irreducible(cls, d, a, b, c):
        forbidden = set(cls.forbidden_values(d))
        return forbidden.isdisjoint(cls.criterion_values(a, b, c))

    @classmethod
    def spec(cls, d, a, b, c):
        """Validated ModuleSpec for this family (parity is checked here)."""
        return module_spec(cls.name, d, a, b, c)


class HFamilyLike(FamilyLike):
    """
    Protocol for families of modules of the additive DAHA.

    Notes
    -----
    Subclasses implement `central_scalars` and `_actions`, which returns
    four callables mapping a basis index i to the image of v_i as a dict
    {j: coefficient of v_j}.

    """

    @classmethod
    def build(cls, d, a, b, c):
        spec = cls.spec(d, a, b, c)
        actions = cls._actions(spec)
        matrices = [cls._matrix_from_action(spec.d + 1, action) for action in actions]
        return HRep(*matrices, meta=spec)

    @staticmethod
    def central_scalars(spec):
        """Scalars (k0, k1, k0v, k1v) by which the four squares act."""
        raise NotImplementedError

    @staticmethod
    def _actions(spec):
        raise NotImplementedError

    @staticmethod
    def _matrix_from_action(dim, action):
        """Matrix whose i-th column holds the coordinates of action(i)."""
        columns = []
        for i in range(dim):
            column = [0] * dim
            for j, coefficient in action(i).items():
                column[j] += coefficient
            columns.append(column)
        return RatMatrix.from_columns(columns, dim)
