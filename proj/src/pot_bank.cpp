#include "graphforge/pot.hpp"

namespace graphforge {

// The bundled bank, stored in the same text format the --pot-bank directory
// loader accepts. Library calls appear only where their output is
// contractually deterministic (values, unique sets, lexicographic orders);
// anything with solver-dependent tie-breaking is written out longhand so the
// printed result matches the reference answer on every instance.
static const char* kBank = R"BANK(
task: cycle_detection
variant_id: 1
expected_output_rule: yes_no
---
import re
import networkx as nx

# Graph description
graph = "{graph_text}"

# Regular expression to extract edges
pattern = r"{edge_pattern}"
matches = re.findall(pattern, graph)

# Create an undirected graph
G = nx.Graph()
for i, j in matches:
    G.add_edge(int(i), int(j))

# Detect a cycle
try:
    nx.find_cycle(G)
    print("Yes")
except nx.exception.NetworkXNoCycle:
    print("No")
=====
task: cycle_detection
variant_id: 2
expected_output_rule: yes_no
---
import re

graph = "{graph_text}"
edges = [(int(a), int(b)) for a, b in re.findall(r"{edge_pattern}", graph)]

# Union-find: an edge inside an existing component closes a cycle
parent = {}

def find(x):
    parent.setdefault(x, x)
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x

has_cycle = False
for a, b in edges:
    ra, rb = find(a), find(b)
    if ra == rb:
        has_cycle = True
        break
    parent[ra] = rb

print("Yes" if has_cycle else "No")
=====
task: bipartite_check
variant_id: 1
expected_output_rule: yes_no
---
import re
import networkx as nx

graph = "{graph_text}"
pattern = r"{edge_pattern}"
matches = re.findall(pattern, graph)

G = nx.Graph()
G.add_nodes_from(range({n}))
for i, j in matches:
    G.add_edge(int(i), int(j))

print("Yes" if nx.is_bipartite(G) else "No")
=====
task: bipartite_check
variant_id: 2
expected_output_rule: yes_no
---
import re
from collections import deque

graph = "{graph_text}"
adj = {}
for a, b in re.findall(r"{edge_pattern}", graph):
    a, b = int(a), int(b)
    adj.setdefault(a, []).append(b)
    adj.setdefault(b, []).append(a)

color = {}
ok = True
for start in range({n}):
    if start in color or start not in adj:
        continue
    color[start] = 0
    queue = deque([start])
    while queue and ok:
        v = queue.popleft()
        for w in adj.get(v, []):
            if w not in color:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                ok = False
                break

print("Yes" if ok else "No")
=====
task: connectivity
variant_id: 1
expected_output_rule: yes_no
---
import re
import networkx as nx

graph = "{graph_text}"
pattern = r"{edge_pattern}"

G = nx.Graph()
G.add_nodes_from(range({n}))
for i, j in re.findall(pattern, graph):
    G.add_edge(int(i), int(j))

print("Yes" if nx.has_path(G, {u}, {v}) else "No")
=====
task: connectivity
variant_id: 2
expected_output_rule: yes_no
---
import re

graph = "{graph_text}"
adj = {}
for a, b in re.findall(r"{edge_pattern}", graph):
    a, b = int(a), int(b)
    adj.setdefault(a, set()).add(b)
    adj.setdefault(b, set()).add(a)

seen = {{u}}
stack = [{u}]
while stack:
    v = stack.pop()
    for w in adj.get(v, ()):  # noqa: E501
        if w not in seen:
            seen.add(w)
            stack.append(w)

print("Yes" if {v} in seen else "No")
=====
task: edge_check
variant_id: 1
expected_output_rule: yes_no
---
import re
import networkx as nx

graph = "{graph_text}"
G = nx.Graph()
for i, j in re.findall(r"{edge_pattern}", graph):
    G.add_edge(int(i), int(j))

print("Yes" if G.has_edge({u}, {v}) else "No")
=====
task: edge_check
variant_id: 2
expected_output_rule: yes_no
---
import re

graph = "{graph_text}"
edges = set()
for a, b in re.findall(r"{edge_pattern}", graph):
    edges.add((int(a), int(b)))
    edges.add((int(b), int(a)))

print("Yes" if ({u}, {v}) in edges else "No")
=====
task: euler_path
variant_id: 1
expected_output_rule: yes_no
---
import re

graph = "{graph_text}"
edges = [(int(a), int(b)) for a, b in re.findall(r"{edge_pattern}", graph)]

degree = {}
adj = {}
for a, b in edges:
    degree[a] = degree.get(a, 0) + 1
    degree[b] = degree.get(b, 0) + 1
    adj.setdefault(a, []).append(b)
    adj.setdefault(b, []).append(a)

odd = [v for v, d in degree.items() if d % 2 == 1]

# every node with an edge must sit in one component
connected = True
if edges:
    start = min(degree)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    connected = all(v in seen for v in degree)

print("Yes" if connected and len(odd) in (0, 2) else "No")
=====
task: euler_path
variant_id: 2
expected_output_rule: yes_no
---
import re
from collections import defaultdict

text = "{graph_text}"
adj = defaultdict(set)
for a, b in re.findall(r"{edge_pattern}", text):
    adj[int(a)].add(int(b))
    adj[int(b)].add(int(a))

def reachable(start):
    out = set()
    todo = [start]
    while todo:
        v = todo.pop()
        if v in out:
            continue
        out.add(v)
        todo.extend(adj[v])
    return out

if not adj:
    print("Yes")
else:
    odd_count = sum(1 for v in adj if len(adj[v]) % 2 == 1)
    comp = reachable(min(adj))
    if odd_count in (0, 2) and all(v in comp for v in adj):
        print("Yes")
    else:
        print("No")
=====
task: hamilton_path
variant_id: 1
expected_output_rule: yes_no
---
import re

graph = "{graph_text}"
n = {n}
adj = {v: set() for v in range(n)}
for a, b in re.findall(r"{edge_pattern}", graph):
    adj[int(a)].add(int(b))
    adj[int(b)].add(int(a))

def feasible(current, visited):
    # unvisited nodes plus the endpoint must stay in one piece
    rest = [v for v in range(n) if v not in visited]
    if not rest:
        return True
    seen = {current}
    stack = [current]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen and y not in visited or y == current:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return all(v in seen for v in rest)

def extend(v, visited):
    if len(visited) == n:
        return True
    if not feasible(v, visited):
        return False
    for w in sorted(adj[v]):
        if w not in visited:
            visited.add(w)
            if extend(w, visited):
                return True
            visited.remove(w)
    return False

found = any(extend(s, {s}) for s in range(n))
print("Yes" if found else "No")
=====
task: hamilton_path
variant_id: 2
expected_output_rule: yes_no
---
import re

text = "{graph_text}"
n = {n}
edges = {(int(a), int(b)) for a, b in re.findall(r"{edge_pattern}", text)}
edges |= {(b, a) for a, b in edges}
neighbors = {v: sorted(w for u, w in edges if u == v) for v in range(n)}

def search(path, used):
    if len(path) == n:
        return True
    # any stranded unvisited node kills this branch
    for v in range(n):
        if v not in used and not any(w not in used or w == path[-1] for w in neighbors[v]):
            return False
    for w in neighbors[path[-1]]:
        if w not in used:
            path.append(w)
            used.add(w)
            if search(path, used):
                return True
            path.pop()
            used.remove(w)
    return False

print("Yes" if any(search([s], {s}) for s in range(n)) else "No")
=====
task: planarity
variant_id: 1
expected_output_rule: yes_no
---
import re
import networkx as nx

graph = "{graph_text}"
G = nx.Graph()
G.add_nodes_from(range({n}))
for i, j in re.findall(r"{edge_pattern}", graph):
    G.add_edge(int(i), int(j))

is_planar, _ = nx.check_planarity(G)
print("Yes" if is_planar else "No")
=====
task: planarity
variant_id: 2
expected_output_rule: yes_no
---
import re
import networkx as nx

text = "{graph_text}"
edge_section = text.split("edges are: ")[1]
G = nx.Graph()
G.add_nodes_from(range({n}))
if not edge_section.startswith("none"):
    for token in re.findall(r"{edge_pattern}", edge_section):
        G.add_edge(int(token[0]), int(token[1]))

print("Yes" if nx.check_planarity(G)[0] else "No")
=====
task: topological_sort
variant_id: 1
expected_output_rule: node_seq
---
import re
import networkx as nx

graph = "{graph_text}"
pattern = r"{edge_pattern}"

G = nx.DiGraph()
G.add_nodes_from(range({n}))
for i, j in re.findall(pattern, graph):
    G.add_edge(int(i), int(j))

# smallest-id-first topological order
print(list(nx.lexicographical_topological_sort(G)))
=====
task: topological_sort
variant_id: 2
expected_output_rule: node_seq
---
import re
import heapq

graph = "{graph_text}"
n = {n}
adj = {v: [] for v in range(n)}
indeg = {v: 0 for v in range(n)}
for a, b in re.findall(r"{edge_pattern}", graph):
    adj[int(a)].append(int(b))
    indeg[int(b)] += 1

heap = [v for v in range(n) if indeg[v] == 0]
heapq.heapify(heap)
order = []
while heap:
    v = heapq.heappop(heap)
    order.append(v)
    for w in adj[v]:
        indeg[w] -= 1
        if indeg[w] == 0:
            heapq.heappush(heap, w)

print(order)
=====
task: graph_traversal
variant_id: 1
expected_output_rule: node_seq
---
import re
from collections import deque

graph = "{graph_text}"
adj = {}
for a, b in re.findall(r"{edge_pattern}", graph):
    a, b = int(a), int(b)
    adj.setdefault(a, []).append(b)
    adj.setdefault(b, []).append(a)

def bfs(start):
    order = []
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in sorted(adj.get(v, [])):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return order

def dfs(start):
    order = []
    seen = set()
    stack = [start]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        order.append(v)
        for w in sorted(adj.get(v, []), reverse=True):
            if w not in seen:
                stack.append(w)
    return order

print({mode_fn}({start}))
=====
task: graph_traversal
variant_id: 2
expected_output_rule: node_seq
---
import re

text = "{graph_text}"
neighbors = {}
for a, b in re.findall(r"{edge_pattern}", text):
    a, b = int(a), int(b)
    neighbors.setdefault(a, set()).add(b)
    neighbors.setdefault(b, set()).add(a)

mode = "{mode_fn}"
order = []
seen = set()
if mode == "bfs":
    queue = [{start}]
    seen.add({start})
    while queue:
        v = queue.pop(0)
        order.append(v)
        for w in sorted(neighbors.get(v, ())):
            if w not in seen:
                seen.add(w)
                queue.append(w)
else:
    stack = [{start}]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        order.append(v)
        for w in sorted(neighbors.get(v, ()), reverse=True):
            if w not in seen:
                stack.append(w)

print(order)
=====
task: neighbor
variant_id: 1
expected_output_rule: node_list
---
import re
import networkx as nx

graph = "{graph_text}"
G = nx.Graph()
G.add_nodes_from(range({n}))
for i, j in re.findall(r"{edge_pattern}", graph):
    G.add_edge(int(i), int(j))

print(sorted(G.neighbors({u})))
=====
task: neighbor
variant_id: 2
expected_output_rule: node_list
---
import re

graph = "{graph_text}"
out = set()
for a, b in re.findall(r"{edge_pattern}", graph):
    a, b = int(a), int(b)
    if a == {u}:
        out.add(b)
    if b == {u}:
        out.add(a)

print(sorted(out))
=====
task: predecessor
variant_id: 1
expected_output_rule: node_list
---
import re
import networkx as nx

graph = "{graph_text}"
G = nx.DiGraph()
G.add_nodes_from(range({n}))
for i, j in re.findall(r"{edge_pattern}", graph):
    G.add_edge(int(i), int(j))

print(sorted(G.predecessors({u})))
=====
task: predecessor
variant_id: 2
expected_output_rule: node_list
---
import re

text = "{graph_text}"
preds = []
for a, b in re.findall(r"{edge_pattern}", text):
    if int(b) == {u}:
        preds.append(int(a))

print(sorted(set(preds)))
=====
task: common_neighbors
variant_id: 1
expected_output_rule: count
---
import re
import networkx as nx

# Graph description
graph = "{graph_text}"

# Regular expression to extract edges
pattern = r"{edge_pattern}"

# Create an undirected graph
G = nx.Graph()

# Find all matches in the text
matches = re.findall(pattern, graph)

# Add edges to the graph
for i, j in matches:
    G.add_edge(int(i), int(j))

# Parameters
node1 = {u}
node2 = {v}

# Calculate common neighbors
print(len(list(nx.common_neighbors(G, node1, node2))))
=====
task: common_neighbors
variant_id: 2
expected_output_rule: count
---
import re

graph = "{graph_text}"
adj = {}
for a, b in re.findall(r"{edge_pattern}", graph):
    a, b = int(a), int(b)
    adj.setdefault(a, set()).add(b)
    adj.setdefault(b, set()).add(a)

print(len(adj.get({u}, set()) & adj.get({v}, set())))
=====
task: degree_counting
variant_id: 1
expected_output_rule: integer
---
import re
import networkx as nx

graph = "{graph_text}"
G = nx.Graph()
G.add_nodes_from(range({n}))
for i, j in re.findall(r"{edge_pattern}", graph):
    G.add_edge(int(i), int(j))

print(G.degree({u}))
=====
task: degree_counting
variant_id: 2
expected_output_rule: integer
---
import re

text = "{graph_text}"
count = 0
for a, b in re.findall(r"{edge_pattern}", text):
    if int(a) == {u} or int(b) == {u}:
        count += 1

print(count)
=====
task: jaccard
variant_id: 1
expected_output_rule: fraction4
---
import re
import networkx as nx

graph = "{graph_text}"
G = nx.Graph()
G.add_nodes_from(range({n}))
for i, j in re.findall(r"{edge_pattern}", graph):
    G.add_edge(int(i), int(j))

_, _, score = next(iter(nx.jaccard_coefficient(G, [({u}, {v})])))
print(f"{score:.4f}")
=====
task: jaccard
variant_id: 2
expected_output_rule: fraction4
---
import re

graph = "{graph_text}"
adj = {}
for a, b in re.findall(r"{edge_pattern}", graph):
    a, b = int(a), int(b)
    adj.setdefault(a, set()).add(b)
    adj.setdefault(b, set()).add(a)

nu = adj.get({u}, set())
nv = adj.get({v}, set())
union = nu | nv
value = len(nu & nv) / len(union) if union else 0.0
print(f"{value:.4f}")
=====
task: clustering_coefficient
variant_id: 1
expected_output_rule: fraction4
---
import re
import networkx as nx

graph = "{graph_text}"
G = nx.Graph()
G.add_nodes_from(range({n}))
for i, j in re.findall(r"{edge_pattern}", graph):
    G.add_edge(int(i), int(j))

print(f"{nx.clustering(G, {u}):.4f}")
=====
task: clustering_coefficient
variant_id: 2
expected_output_rule: fraction4
---
import re

text = "{graph_text}"
adj = {}
for a, b in re.findall(r"{edge_pattern}", text):
    a, b = int(a), int(b)
    adj.setdefault(a, set()).add(b)
    adj.setdefault(b, set()).add(a)

nb = sorted(adj.get({u}, set()))
if len(nb) < 2:
    print(f"{0.0:.4f}")
else:
    links = sum(1 for i in range(len(nb)) for j in range(i + 1, len(nb))
                if nb[j] in adj.get(nb[i], set()))
    possible = len(nb) * (len(nb) - 1) / 2
    print(f"{links / possible:.4f}")
=====
task: shortest_path
variant_id: 1
expected_output_rule: integer_or_sentinel
---
import re
import networkx as nx

graph = "{graph_text}"
pattern = r"{edge_pattern}"

G = nx.Graph()
for a, b, w in re.findall(pattern, graph):
    G.add_edge(int(a), int(b), weight=int(w))

try:
    print(nx.shortest_path_length(G, {u}, {v}, weight="weight"))
except (nx.exception.NetworkXNoPath, nx.exception.NodeNotFound):
    print("unreachable")
=====
task: shortest_path
variant_id: 2
expected_output_rule: integer_or_sentinel
---
import re
import heapq

graph = "{graph_text}"
adj = {}
for a, b, w in re.findall(r"{edge_pattern}", graph):
    a, b, w = int(a), int(b), int(w)
    adj.setdefault(a, []).append((b, w))
    adj.setdefault(b, []).append((a, w))

dist = {{u}: 0}
heap = [(0, {u})]
done = set()
while heap:
    d, v = heapq.heappop(heap)
    if v in done:
        continue
    done.add(v)
    for w, weight in adj.get(v, []):
        if d + weight < dist.get(w, float("inf")):
            dist[w] = d + weight
            heapq.heappush(heap, (dist[w], w))

print(dist[{v}] if {v} in dist else "unreachable")
=====
task: diameter
variant_id: 1
expected_output_rule: integer_or_sentinel
---
import re
import networkx as nx

graph = "{graph_text}"
G = nx.Graph()
G.add_nodes_from(range({n}))
for i, j in re.findall(r"{edge_pattern}", graph):
    G.add_edge(int(i), int(j))

if nx.is_connected(G):
    print(nx.diameter(G))
else:
    print("infinite")
=====
task: diameter
variant_id: 2
expected_output_rule: integer_or_sentinel
---
import re
from collections import deque

text = "{graph_text}"
n = {n}
adj = {v: set() for v in range(n)}
for a, b in re.findall(r"{edge_pattern}", text):
    adj[int(a)].add(int(b))
    adj[int(b)].add(int(a))

best = 0
disconnected = False
for s in range(n):
    dist = {s: 0}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    if len(dist) < n:
        disconnected = True
        break
    best = max(best, max(dist.values()))

print("infinite" if disconnected else best)
=====
task: minimum_spanning_tree
variant_id: 1
expected_output_rule: integer
---
import re
import networkx as nx

graph = "{graph_text}"

# Regular expression to extract edges with weights
pattern = r"{edge_pattern}"
matches = re.findall(pattern, graph)

# Create an undirected graph
G = nx.Graph()

# Add edges with weights to the graph
for node1, node2, weight in matches:
    G.add_edge(int(node1), int(node2), weight=int(weight))

# Calculate the total weight of the minimum spanning tree (MST)
T = nx.minimum_spanning_tree(G)
mst_edges_with_weight = T.edges(data=True)
total_weight = sum(edge[2]['weight'] for edge in mst_edges_with_weight)
print(total_weight)
=====
task: minimum_spanning_tree
variant_id: 2
expected_output_rule: integer
---
import re

graph = "{graph_text}"
edges = sorted((int(w), int(a), int(b))
               for a, b, w in re.findall(r"{edge_pattern}", graph))

parent = {}

def find(x):
    parent.setdefault(x, x)
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x

total = 0
for w, a, b in edges:
    ra, rb = find(a), find(b)
    if ra != rb:
        parent[ra] = rb
        total += w

print(total)
=====
task: maximum_flow
variant_id: 1
expected_output_rule: integer
---
import re
import networkx as nx

# Graph description
text = "{graph_text}"

# Regular expression to extract edges with weights
pattern = r"{edge_pattern}"
matches = re.findall(pattern, text)

# Create a directed graph
G = nx.DiGraph()

# Add edges with weights to the graph
for node1, node2, weight in matches:
    G.add_edge(int(node1), int(node2), weight=int(weight))

# Parameters
node1 = {u}
node2 = {v}

# Calculate maximum flow
G.add_nodes_from([node1, node2])
flow_value, flow_dict = nx.maximum_flow(G, node1, node2, capacity='weight')
print(flow_value)
=====
task: maximum_flow
variant_id: 2
expected_output_rule: integer
---
import re
from collections import deque

text = "{graph_text}"
n = {n}
capacity = [[0] * n for _ in range(n)]
for a, b, w in re.findall(r"{edge_pattern}", text):
    capacity[int(a)][int(b)] += int(w)

source, sink = {u}, {v}
flow = 0
while True:
    parent = [-1] * n
    parent[source] = source
    queue = deque([source])
    while queue and parent[sink] < 0:
        v = queue.popleft()
        for w in range(n):
            if parent[w] < 0 and capacity[v][w] > 0:
                parent[w] = v
                queue.append(w)
    if parent[sink] < 0:
        break
    bottleneck = float("inf")
    x = sink
    while x != source:
        bottleneck = min(bottleneck, capacity[parent[x]][x])
        x = parent[x]
    x = sink
    while x != source:
        capacity[parent[x]][x] -= bottleneck
        capacity[x][parent[x]] += bottleneck
        x = parent[x]
    flow += bottleneck

print(flow)
=====
task: maximum_clique
variant_id: 1
expected_output_rule: clique_size
---
import re
import networkx as nx

graph = "{graph_text}"
G = nx.Graph()
G.add_nodes_from(range({n}))
for i, j in re.findall(r"{edge_pattern}", graph):
    G.add_edge(int(i), int(j))

print(max(len(c) for c in nx.find_cliques(G)))
=====
task: maximum_clique
variant_id: 2
expected_output_rule: clique_size
---
import re

text = "{graph_text}"
n = {n}
adj = {v: set() for v in range(n)}
for a, b in re.findall(r"{edge_pattern}", text):
    adj[int(a)].add(int(b))
    adj[int(b)].add(int(a))

best = 0

def extend(size, candidates):
    global best
    if size > best:
        best = size
    for i, v in enumerate(candidates):
        if size + len(candidates) - i <= best:
            return
        extend(size + 1, [w for w in candidates[i + 1:] if w in adj[v]])

extend(0, list(range(n)))
print(best)
=====
task: maximum_triangle_sum
variant_id: 1
expected_output_rule: integer_or_sentinel
---
import re

graph = "{graph_text}"
weights = {node_weights_dict}
adj = {}
for a, b in re.findall(r"{edge_pattern}", graph):
    a, b = int(a), int(b)
    adj.setdefault(a, set()).add(b)
    adj.setdefault(b, set()).add(a)

best = None
nodes = sorted(weights)
for i, a in enumerate(nodes):
    for b in sorted(adj.get(a, set())):
        if b <= a:
            continue
        for c in sorted(adj.get(a, set()) & adj.get(b, set())):
            if c <= b:
                continue
            total = weights[a] + weights[b] + weights[c]
            if best is None or total > best:
                best = total

print(best if best is not None else "No triangle")
=====
task: maximum_triangle_sum
variant_id: 2
expected_output_rule: integer_or_sentinel
---
import re
from itertools import combinations

text = "{graph_text}"
weights = {node_weights_dict}
edges = set()
for a, b in re.findall(r"{edge_pattern}", text):
    edges.add((int(a), int(b)))
    edges.add((int(b), int(a)))

best = None
for a, b, c in combinations(sorted(weights), 3):
    if (a, b) in edges and (a, c) in edges and (b, c) in edges:
        total = weights[a] + weights[b] + weights[c]
        if best is None or total > best:
            best = total

print(best if best is not None else "No triangle")
=====
task: strongly_connected_components
variant_id: 1
expected_output_rule: components
---
import re
import networkx as nx

graph = "{graph_text}"
G = nx.DiGraph()
G.add_nodes_from(range({n}))
for i, j in re.findall(r"{edge_pattern}", graph):
    G.add_edge(int(i), int(j))

components = sorted((sorted(c) for c in nx.strongly_connected_components(G)),
                    key=lambda c: c[0])
print(components)
=====
task: strongly_connected_components
variant_id: 2
expected_output_rule: components
---
import re
import sys

sys.setrecursionlimit(10000)

text = "{graph_text}"
n = {n}
adj = {v: [] for v in range(n)}
radj = {v: [] for v in range(n)}
for a, b in re.findall(r"{edge_pattern}", text):
    adj[int(a)].append(int(b))
    radj[int(b)].append(int(a))

# Kosaraju: order by finish time, then sweep the reverse graph
order = []
seen = set()

def dfs1(v):
    seen.add(v)
    for w in adj[v]:
        if w not in seen:
            dfs1(w)
    order.append(v)

for v in range(n):
    if v not in seen:
        dfs1(v)

assigned = set()
components = []

def dfs2(v, comp):
    assigned.add(v)
    comp.append(v)
    for w in radj[v]:
        if w not in assigned:
            dfs2(w, comp)

for v in reversed(order):
    if v not in assigned:
        comp = []
        dfs2(v, comp)
        components.append(sorted(comp))

components.sort(key=lambda c: c[0])
print(components)
=====
task: pagerank
variant_id: 1
expected_output_rule: argmax_node
---
import re

graph = "{graph_text}"
n = {n}
adj = {v: set() for v in range(n)}
for a, b in re.findall(r"{edge_pattern}", graph):
    adj[int(a)].add(int(b))
    adj[int(b)].add(int(a))

# Parameters
alpha = {alpha}
max_iter = {max_iter}

# The initial PageRank values for all nodes are 1/N
pr = [1.0 / n] * n
outdeg = [len(adj[v]) for v in range(n)]
for _ in range(max_iter):
    dangling = 0.0
    for v in range(n):
        if outdeg[v] == 0:
            dangling += pr[v]
    nxt = [0.0] * n
    delta = 0.0
    for v in range(n):
        s = 0.0
        for u in sorted(adj[v]):
            s += pr[u] / outdeg[u]
        s += dangling / n
        nxt[v] = (1.0 - alpha) + alpha * s
        delta = max(delta, abs(nxt[v] - pr[v]))
    pr = nxt
    if delta < 1e-12:
        break

best = 0
for v in range(1, n):
    if pr[v] > pr[best]:
        best = v
print(best)
=====
task: pagerank
variant_id: 2
expected_output_rule: argmax_node
---
import re

text = "{graph_text}"
n = {n}
neighbors = [set() for _ in range(n)]
for a, b in re.findall(r"{edge_pattern}", text):
    neighbors[int(a)].add(int(b))
    neighbors[int(b)].add(int(a))

alpha = {alpha}
max_iter = {max_iter}

scores = [1.0 / n for _ in range(n)]
degree = [len(neighbors[v]) for v in range(n)]
iteration = 0
while iteration < max_iter:
    iteration += 1
    lost = 0.0
    for v in range(n):
        if degree[v] == 0:
            lost += scores[v]
    updated = [0.0] * n
    change = 0.0
    for v in range(n):
        acc = 0.0
        for u in sorted(neighbors[v]):
            acc += scores[u] / degree[u]
        acc += lost / n
        updated[v] = (1.0 - alpha) + alpha * acc
        change = max(change, abs(updated[v] - scores[v]))
    scores = updated
    if change < 1e-12:
        break

top = 0
for v in range(1, n):
    if scores[v] > scores[top]:
        top = v
print(top)
=====
task: maximum_matching
variant_id: 1
expected_output_rule: pair_list
---
import re

# Graph description
graph = "{graph_text}"

# Regular expression to extract connections
pattern = r"(\d+):\s*\[(.*?)\]"
matches = re.findall(pattern, graph)

adj = {}
for node, targets in matches:
    adj[int(node)] = [int(x) for x in targets.split(", ") if x]

node_list1 = {left_list}

match_right = {}
match_left = {}

def dfs(node, visited):
    for neighbor in sorted(adj.get(node, [])):
        if neighbor in visited:
            continue
        visited.add(neighbor)
        if neighbor not in match_right:
            match_right[neighbor] = node
            match_left[node] = neighbor
            return True
        if dfs(match_right[neighbor], visited):
            match_right[neighbor] = node
            match_left[node] = neighbor
            return True
    return False

for node in node_list1:
    dfs(node, set())

pairs = [(u, match_left[u]) for u in node_list1 if u in match_left]
print(sorted(pairs))
=====
task: maximum_matching
variant_id: 2
expected_output_rule: pair_list
---
import ast

graph = "{graph_text}"
adj = ast.literal_eval(graph)
left_nodes = {left_list}

owner = {}

def try_assign(u, banned):
    for w in sorted(adj.get(u, [])):
        if w in banned:
            continue
        banned.add(w)
        if owner.get(w) is None or try_assign(owner[w], banned):
            owner[w] = u
            return True
    return False

for u in left_nodes:
    try_assign(u, set())

result = sorted((u, w) for w, u in owner.items())
print(result)
)BANK";

namespace {

std::string trim_line(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<CodeTemplate> parse_pot_bank_text(const std::string& text,
                                              const std::string& origin) {
  std::vector<CodeTemplate> out;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    lines.push_back(cur);
  }
  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < lines.size() && (trim_line(lines[i]).empty() || trim_line(lines[i]) == "====="))
      ++i;
  };
  skip_blank();
  while (i < lines.size()) {
    CodeTemplate t;
    bool saw_task = false, saw_variant = false, saw_rule = false;
    while (i < lines.size() && trim_line(lines[i]) != "---") {
      std::string line = trim_line(lines[i]);
      ++i;
      if (line.empty()) continue;
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) {
        throw BankError(origin + ": malformed front-matter line '" + line + "'");
      }
      std::string key = trim_line(line.substr(0, colon));
      std::string value = trim_line(line.substr(colon + 1));
      if (key == "task") {
        auto task = task_from_name(value);
        if (!task) throw BankError(origin + ": unknown task '" + value + "'");
        t.task = *task;
        saw_task = true;
      } else if (key == "variant_id") {
        t.variant_id = std::stoi(value);
        saw_variant = true;
      } else if (key == "expected_output_rule") {
        t.expected_output_rule = value;
        saw_rule = true;
      } else {
        throw BankError(origin + ": unknown front-matter key '" + key + "'");
      }
    }
    if (i >= lines.size()) throw BankError(origin + ": missing '---' separator");
    ++i;  // consume ---
    if (!saw_task || !saw_variant || !saw_rule) {
      throw BankError(origin + ": entry missing task/variant_id/expected_output_rule");
    }
    std::string body;
    while (i < lines.size() && trim_line(lines[i]) != "=====") {
      body += lines[i];
      body += '\n';
      ++i;
    }
    // strip leading/trailing blank lines of the body
    while (!body.empty() && body.front() == '\n') body.erase(body.begin());
    while (body.size() >= 2 && body[body.size() - 1] == '\n' && body[body.size() - 2] == '\n') {
      body.pop_back();
    }
    t.body = std::move(body);
    out.push_back(std::move(t));
    skip_blank();
  }
  return out;
}

const std::vector<CodeTemplate>& pot_bank() {
  static const std::vector<CodeTemplate> kParsed =
      parse_pot_bank_text(kBank, "<bundled bank>");
  return kParsed;
}

}  // namespace graphforge
