from . import homogeneous, fkm
