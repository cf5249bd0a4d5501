#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

if __name__ == '__main__':
    from bewit import _cli
    _cli.main()
