# -*- coding: utf-8 -*-

"""Top-level package for hyperext."""

__author__ = """David Seddon"""
__email__ = 'david@seddonym.me'
__version__ = '0.1.0'
