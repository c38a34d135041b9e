"""
Domain models for homimage
"""
