from .exceptions import *  # noqa F401, F403
from .monomials import *  # noqa F401, F403
from .simplicial import *  # noqa F401, F403
from .homology import *  # noqa F401, F403
from .invariants import *  # noqa F401, F403
from .polymatroidal import *  # noqa F401, F403
from .acm_simplicial import *  # noqa F401, F403
from .parsing import *  # noqa F401, F403
from .results import *  # noqa F401, F403
