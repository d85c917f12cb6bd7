"""
Searching for singular vectors
==============================

A singular vector is a positive-degree element killed by the raising
operators and by the whole degree +1 part.  The search walks candidate
weights, assembles one exact sparse block per weight, and returns kernel
certificates that can be replayed byte for byte.
"""

import json

from e510.singular_search import search_module, sweep
from e510.verma import tensor_from_terms, proportional
from e510.catalog import known_vector

# degree 1 in M(F(0,0,1,0)): the ten-term invariant combination
certs = search_module((0, 0, 1, 0), 1)
for c in certs:
    print("M(%s) degree %d -> weight (%s), kernel dim %d, %d terms"
          % (c["mu"], c["degree"], c["weight"], c["kernel_dim"],
             len(c["vectors"][0])))

# the found kernel vector is the catalog one up to a scalar
mod, w = known_vector("1C")
found = tensor_from_terms(certs[0]["vectors"][0])
print("matches the catalog vector with scalar", proportional(w, found))

# a module with no singular vectors at all comes back empty
print("M(0,1,1,0) degrees 1..4:",
      sweep(mus=[(0, 1, 1, 0)], degrees=(1, 2, 3, 4)))

# certificates serialize to JSON; equal configurations give equal bytes
blob = json.dumps(certs, sort_keys=True)
blob2 = json.dumps(search_module((0, 0, 1, 0), 1), sort_keys=True)
print("serialized certificates are reproducible:", blob == blob2)
