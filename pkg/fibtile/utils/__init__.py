from fibtile.utils.codec import OBJECT_TYPE_MAP, decode, encode, load
from fibtile.utils.render import render, render_board
