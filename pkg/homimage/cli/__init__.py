"""
Command-line interface for homimage
"""
