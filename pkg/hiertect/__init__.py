from .core import *
from .lib import *
from .utils import *
