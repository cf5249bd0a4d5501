#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#
