"""
Tests package for the EI preprojective toolkit.
"""
