"""factorlab: exact verification of factorizations G = HK of finite classical groups."""

__version__ = "0.1.0"
