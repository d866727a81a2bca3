# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Toggle groups of subset families.

Families, posets, graphs, matroids and closure systems are plain dicts in
the JSON formats of the ``togglekit`` command-line tool.
"""

import json

from togglekit import _togglekit
from togglekit._togglekit import (
    DomainError,
    ParseError,
    ResourceLimitError,
    ValidationError,
)

__all__ = [
    "DomainError",
    "ParseError",
    "ResourceLimitError",
    "ValidationError",
    "cover_closure",
    "cover_closure_dot",
    "generate",
    "group",
    "structure",
    "theorem_row",
    "toggle_poset_dot",
    "toggles",
    "verify",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def toggles(family):
    """Cycle strings of t_e for every ground element, in ground order."""
    return _togglekit.toggles(_text(family))


def group(family):
    """Toggle group with its order as a Python int."""
    result = json.loads(_togglekit.group(_text(family)))
    result["order"] = int(result["order"])
    return result


def generate(kind, source):
    """Family of `kind` ("order-ideals", "ic", "is", ...) built from `source`."""
    return json.loads(_togglekit.generate(kind, _text(source)))


def structure(family, ita=False):
    return json.loads(_togglekit.structure(_text(family), ita))


def cover_closure(system, orbits=False):
    return json.loads(_togglekit.cover_closure(_text(system), orbits))


def theorem_row(system):
    return json.loads(_togglekit.theorem_row(_text(system)))


def toggle_poset_dot(family):
    return _togglekit.toggle_poset_dot(_text(family))


def cover_closure_dot(system):
    return _togglekit.cover_closure_dot(_text(system))


def verify(suite, max_size=None, workers=1):
    return json.loads(_togglekit.verify(suite, max_size, workers))
