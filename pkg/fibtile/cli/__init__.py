from fibtile.cli.__main__ import main
