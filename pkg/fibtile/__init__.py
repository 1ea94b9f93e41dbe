from fibtile.combinat import *
from fibtile.cli.__main__ import main
