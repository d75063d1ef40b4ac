from itertools import combinations, permutations

from hypothesis import settings

settings.register_profile("repro", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("repro")


def naive_occurrences(values, pattern):
    """Every index combination, filtered; 1-based tuples in lexicographic order."""
    letters = pattern.letters
    adj = pattern.adjacency()
    k = len(letters)
    out = []
    for idx in combinations(range(len(values)), k):
        if any(adj[j] and idx[j + 1] != idx[j] + 1 for j in range(k - 1)):
            continue
        sub = [values[i] for i in idx]
        if all((sub[a] < sub[b]) == (letters[a] < letters[b])
               for a in range(k) for b in range(a + 1, k)):
            out.append(tuple(i + 1 for i in idx))
    return out


def naive_avoiders(n, patterns):
    return [p for p in permutations(range(1, n + 1))
            if not any(naive_occurrences(p, q) for q in patterns)]


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, detail in sorted(mod.RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num}: {title}  {detail}")
