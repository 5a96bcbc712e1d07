"""Truncated inverse-limit points as addresses in the face substitution.

A thread is a base face plus a chain of child addresses: "start at face b,
descend into child a1 of its rule, then child a2 of that rule, ...".
Realizing the thread lists the faces from deepest to base, each one a
child of the next under its substitution rule.  The right shift forgets
the deepest level; a left shift extends upward and sections it.
"""

from tilespace import (Thread, enumerate_threads, load_dataset,
                       random_thread, realize, shift_left, shift_right)

d = load_dataset()

print("thread counts (36 base faces, 6 children per rule):")
for n in range(5):
    total = sum(1 for _ in enumerate_threads(n, d=d))
    print(f"  depth {n}: {total} = 36 * 6^{n}")
print()

t = random_thread(4, seed=2, d=d)
print(f"a random depth-4 thread: base {t.base_face}, "
      f"addresses {t.addresses}")
print(f"  realized: {realize(t, d)}")

cur = t
while cur.depth:
    cur = shift_right(cur, d)
    print(f"  after shift: {realize(cur, d)}")
print()

# a left shift picks a parent rule containing the base as a child; the
# central tile 22 is child 1 of every rule, so any parent works
t0 = Thread(22)
up = shift_left(t0, 7, 1, d)
print(f"extending {realize(t0, d)} upward through rule 7 "
      f"(child 1) gives {realize(up, d)}")
print(f"shift_right undoes it: {shift_right(up, d) == t0}")

# fixed points of the rule table show up as constant threads
print(f"\nrule 1 reproduces tile 1 at position 5: "
      f"{realize(Thread(1, (5,)), d)}")
print(f"rule 29 reproduces tile 29 at position 6: "
      f"{realize(Thread(29, (6,)), d)}")
