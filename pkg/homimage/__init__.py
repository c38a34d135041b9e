"""
homimage - homomorphic image orderings on finite graphs, digraphs and tournaments
"""
__version__ = "1.0.0"
