#!/usr/bin/env python3
#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import setuptools
setuptools.setup()
