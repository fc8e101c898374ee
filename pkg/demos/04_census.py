"""Census of the symmetry conditions over all small planar instances.

Every good ideal of every good semigroup with conductor <= (2,2) and minimum
in [-1,1]^2 is tested.  A failure would be a pair where the conditions are
false; none has been found at this size.
"""

import time

from goodsemi import formats, hunt_cor26
from goodsemi.lattice import Box

t = time.perf_counter()
hunt = hunt_cor26(2, (2, 2), Box((-1, -1), (1, 1)))
print(f"tested {hunt.tested} pairs in {time.perf_counter() - t:.1f}s, {len(hunt.failures)} failures")
print(formats.print_document(formats.Document("report", formats.hunt_payload(hunt))))
