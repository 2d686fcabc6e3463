from sbmrecovery.bounds import *
from sbmrecovery.decoders import *
from sbmrecovery.model import *
from sbmrecovery.simulation import *
from sbmrecovery.utils import *

__version__ = "0.1.0"
