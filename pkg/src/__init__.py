"""
GEPU toolkit: PCA-based global economic policy uncertainty index
"""
__version__ = "0.1.0"
