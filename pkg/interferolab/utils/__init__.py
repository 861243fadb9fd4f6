# -*- coding: utf-8 -*-
"""
This package contains utility functions such as format checks, file
serialization, random generators and sweep helpers.
"""
