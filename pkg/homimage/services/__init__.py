"""
Services package for homimage
"""
