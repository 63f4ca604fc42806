# Copyright 2026 The purenash Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http:#www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Pure Nash equilibria in graphical and colored hypergraphical games.

Documents are JSON text or plain dicts; results come back as dicts.
"""

import json

from . import _purenash
from ._purenash import (
    CapExceededError,
    DocumentError,
    InvariantError,
    PreconditionError,
    PurenashError,
    UsageError,
)

FORMAT_VERSION = _purenash.FORMAT_VERSION

__all__ = [
    "CapExceededError",
    "DocumentError",
    "InvariantError",
    "PreconditionError",
    "PurenashError",
    "UsageError",
    "brute",
    "canonicalize",
    "dumps",
    "example15",
    "gadget",
    "hom",
    "random_fixture",
    "reduce",
    "scc",
    "solve",
    "treewidth",
    "validate",
]


def dumps(doc):
    """JSON text for a document given as text or a dict."""
    if doc is None or isinstance(doc, str):
        return doc
    return json.dumps(doc)


def _data(text):
    return json.loads(text)["data"]


def canonicalize(doc):
    """Canonical serialization of `doc` as text."""
    return _purenash.canonicalize(dumps(doc))


def validate(doc):
    return _data(_purenash.validate(dumps(doc)))


def reduce(doc):
    return _data(_purenash.reduce(dumps(doc)))


def scc(doc):
    return _data(_purenash.scc(dumps(doc)))


def treewidth(doc, exact=False, cap=_purenash.DEFAULT_TREEWIDTH_CAP):
    return _data(_purenash.treewidth(dumps(doc), exact, cap))


def hom(doc, backend="dp", cap=_purenash.DEFAULT_MAPPING_CAP):
    return _data(_purenash.hom(dumps(doc), backend, cap))


def solve(doc, witness=True, width_threshold=12,
          cap=_purenash.DEFAULT_MAPPING_CAP, core_first=False,
          core_cap=_purenash.DEFAULT_CORE_CAP):
    return _data(_purenash.solve(dumps(doc), witness, width_threshold, cap,
                                 core_first, core_cap))


def brute(doc, cap=_purenash.DEFAULT_PROFILE_CAP):
    return _data(_purenash.brute(dumps(doc), cap))


def gadget(variant, params=None, instance=None, left=None, right=None):
    """Build a gadget; `params` is a dict or "k=v,..." text."""
    if params is None:
        params = {}
    elif isinstance(params, str):
        params = _purenash.parse_params(params)
    return json.loads(_purenash.gadget(variant, params, dumps(instance),
                                       dumps(left), dumps(right)))


def example15(m, actions=None):
    params = {"m": m}
    if actions is not None:
        params["actions"] = actions
    return gadget("example15", params)


def random_fixture(kind, seed=0, n=4, m=2, density=0.4):
    return json.loads(_purenash.random_fixture(kind, seed, n, m, density))
