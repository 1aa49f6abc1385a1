#include <array>
#include <map>

#include "graphforge/cot.hpp"

namespace graphforge {

namespace {

// Prompt banks. Each task carries three phrasings; the first one follows the
// classic benchmark wording, the others rephrase the same contract.
const std::map<TaskKind, CotTemplateSet>& bank() {
  static const std::map<TaskKind, CotTemplateSet> kBank = [] {
    std::map<TaskKind, CotTemplateSet> b;

    b[TaskKind::cycle_detection] = {
        {"Determine whether or not there is a cycle in an {directed_word} graph. {format_note} "
         "Given a graph, you need to output Yes or No, indicating whether there is a cycle in "
         "the graph.\nQ: {graph} Is there a cycle in this graph?",
         "You are given an {directed_word} graph and must decide whether it contains any cycle "
         "at all. {format_note} Finish your answer with Yes or No.\nQ: {graph} Does this graph "
         "contain a cycle?",
         "Inspect the following {directed_word} graph for cycles. {format_note} Output Yes if "
         "a cycle exists and No otherwise.\nQ: {graph} Is there a cycle?"},
        {"Since we found the cycle {witness}, the answer is:",
         "A cycle exists (for example {witness}), so the graph is cyclic. The answer is:"},
    };
    b[TaskKind::cycle_detection].conclusions_no = {
        "Since the search finished without closing any cycle, the answer is:",
        "No cycle can be formed anywhere in this graph. The answer is:"};

    b[TaskKind::bipartite_check] = {
        {"Determine whether or not a graph is bipartite. {format_note} Given a graph, you need "
         "to output Yes or No, indicating whether the graph is bipartite.\nQ: {graph} Is this "
         "graph bipartite?",
         "Decide if the following {directed_word} graph is bipartite, i.e. whether its nodes "
         "split into two groups with every edge crossing between the groups. {format_note} "
         "Answer Yes or No.\nQ: {graph} Is the graph bipartite?",
         "Can the nodes of this {directed_word} graph be colored with two colors so that no "
         "edge joins two nodes of the same color? {format_note} Output Yes or No.\nQ: {graph} "
         "Is this graph two-colorable?"},
        {"The two color classes absorb every edge, so the graph is bipartite. The answer is:",
         "A consistent two-coloring exists, therefore the answer is:"},
    };
    b[TaskKind::bipartite_check].conclusions_no = {
        "The odd cycle {witness} cannot be two-colored, so the graph is not bipartite. The "
        "answer is:",
        "Because {witness} is a cycle of odd length, no valid two-coloring exists. The answer "
        "is:"};

    b[TaskKind::connectivity] = {
        {"Determine whether two nodes are connected in an {directed_word} graph. {format_note} "
         "Given a graph and a pair of nodes, you need to output Yes or No, indicating whether "
         "node {u} and node {v} are connected.\nQ: {graph} Are node {u} and node {v} "
         "connected?",
         "Check whether a path exists between two query nodes. {format_note} Answer Yes or "
         "No.\nQ: {graph} Is there a path from node {u} to node {v}?",
         "You must decide if node {v} can be reached from node {u} in this {directed_word} "
         "graph. {format_note} Output Yes or No.\nQ: {graph} Can node {u} reach node {v}?"},
        {"The path {witness} joins the two query nodes, so the answer is:",
         "Node {v} was reached from node {u} (via {witness}), so the answer is:"},
    };
    b[TaskKind::connectivity].conclusions_no = {
        "The search exhausted every reachable node without meeting node {v}, so the answer is:",
        "No path joins node {u} to node {v}. The answer is:"};

    b[TaskKind::edge_check] = {
        {"Determine whether two nodes share an edge in an {directed_word} graph. {format_note} "
         "Given a graph and a pair of nodes, output Yes or No, indicating whether there is an "
         "edge between node {u} and node {v}.\nQ: {graph} Is there an edge between node {u} "
         "and node {v}?",
         "Look up whether the edge ({u}, {v}) appears in the following {directed_word} graph. "
         "{format_note} Answer Yes or No.\nQ: {graph} Does the edge exist?",
         "You are given an {directed_word} graph. {format_note} Decide whether node {u} and "
         "node {v} are directly connected, answering Yes or No.\nQ: {graph} Are node {u} and "
         "node {v} adjacent?"},
        {"The edge is present, so the answer is:",
         "Node {v} appears among the neighbors of node {u}, so the answer is:"},
    };
    b[TaskKind::edge_check].conclusions_no = {
        "The edge does not appear in the graph, so the answer is:",
        "Node {v} is not a neighbor of node {u}, so the answer is:"};

    b[TaskKind::euler_path] = {
        {"Determine whether the graph has an Euler path. An Euler path visits each edge in the "
         "graph exactly once. {format_note} Given a graph, output Yes or No, indicating "
         "whether an Euler path exists.\nQ: {graph} Does this graph have an Euler path?",
         "Decide whether one walk can traverse every edge of this graph exactly once. "
         "{format_note} Answer Yes or No.\nQ: {graph} Is there an Euler path?",
         "You must check the two Euler conditions (connectivity of the edges and the number of "
         "odd-degree nodes) for this graph. {format_note} Output Yes or No.\nQ: {graph} Does "
         "an Euler path exist?"},
        {"The walk {witness} uses every edge exactly once, so the answer is:",
         "With the parity and connectivity conditions satisfied, the walk {witness} certifies "
         "the answer:"},
    };
    b[TaskKind::euler_path].conclusions_no = {
        "The conditions for an Euler path fail, so the answer is:",
        "No single walk can cover every edge exactly once here. The answer is:"};

    b[TaskKind::hamilton_path] = {
        {"Determine whether or not there is a Hamiltonian path in an {directed_word} graph. A "
         "Hamiltonian path visits each node exactly once. {format_note} Given a graph, you "
         "need to output Yes or No, indicating whether there is a Hamiltonian path.\nQ: "
         "{graph} Is there a Hamiltonian path in this graph?",
         "Decide whether some path visits every node of this graph exactly once. {format_note} "
         "Answer Yes or No.\nQ: {graph} Does a Hamiltonian path exist?",
         "Search this graph for a path through all {n} nodes without repetition. {format_note} "
         "Output Yes or No.\nQ: {graph} Is there such a path?"},
        {"The path {witness} visits every node exactly once, so the answer is:",
         "A Hamiltonian path exists, for example {witness}. The answer is:"},
    };
    b[TaskKind::hamilton_path].conclusions_no = {
        "Every branch of the search backtracked before covering all nodes, so the answer is:",
        "No ordering of the nodes forms a path, so the answer is:"};

    b[TaskKind::planarity] = {
        {"Determine whether the graph is planar, i.e. whether it can be drawn in the plane "
         "without any edges crossing. {format_note} Given a graph, output Yes or No, "
         "indicating whether the graph is planar.\nQ: {graph} Is this graph planar?",
         "Decide whether this graph admits a planar embedding. {format_note} Answer Yes or "
         "No.\nQ: {graph} Is the graph planar?",
         "You must test the following graph for planarity. {format_note} Output Yes or No.\nQ: "
         "{graph} Can it be drawn without edge crossings?"},
        {"The left-right test succeeded, so the graph can be drawn without crossings. The "
         "answer is:",
         "A planar embedding exists, so the answer is:"},
    };
    b[TaskKind::planarity].conclusions_no = {
        "The graph contains a Kuratowski obstruction, so the answer is:",
        "No planar embedding exists, so the answer is:"};

    b[TaskKind::topological_sort] = {
        {"Find a topological ordering of a directed acyclic graph. In such an ordering every "
         "directed edge (u->v) has u appearing before v. {format_note} Output the ordering as "
         "a list of nodes.\nQ: {graph} Give a topological ordering of this graph.",
         "Arrange the nodes of this DAG so that every edge points from left to right. "
         "{format_note} Output the node list.\nQ: {graph} What is a valid topological order?",
         "You are given a directed acyclic graph and must produce a topological sort. "
         "{format_note} Report the order as a list.\nQ: {graph} Provide the ordering."},
        {"Every edge points forward in the ordering {witness}. The answer is:",
         "The removal order satisfies all edge constraints. The answer is:"},
    };

    b[TaskKind::graph_traversal] = {
        {"Perform a {mode_name} traversal of an {directed_word} graph starting from node "
         "{start}, visiting smaller node ids first. {format_note} Output the visit order as a "
         "list of nodes.\nQ: {graph} What order does the traversal visit the nodes in?",
         "Starting at node {start}, run a {mode_name} and report the order in which nodes are "
         "visited (break ties toward smaller ids). {format_note}\nQ: {graph} Give the visit "
         "order.",
         "You must traverse this graph with a {mode_name} from node {start}, always preferring "
         "the smallest unvisited neighbor. {format_note} Output the resulting list.\nQ: "
         "{graph} List the visit order."},
        {"The traversal visited the nodes in the order {witness}. The answer is:",
         "No reachable node remains, so the order is complete. The answer is:"},
    };

    b[TaskKind::neighbor] = {
        {"List the neighbors of a node in an {directed_word} graph. {format_note} Given a "
         "graph and a node, output the neighbors of that node as a list.\nQ: {graph} Which "
         "nodes are adjacent to node {u}?",
         "Report every node directly connected to node {u}. {format_note} Output a list.\nQ: "
         "{graph} What are the neighbors of node {u}?",
         "You are given an {directed_word} graph. {format_note} Collect the neighbor set of "
         "node {u} and output it as a list.\nQ: {graph} List the neighbors of node {u}."},
        {"Reading off the adjacency of node {u} gives the set above. The answer is:",
         "Those are exactly the nodes sharing an edge with node {u}. The answer is:"},
    };

    b[TaskKind::predecessor] = {
        {"List the predecessors of a node in a directed graph. A node u is a predecessor of v "
         "if the edge (u->v) exists. {format_note} Output the predecessors as a list.\nQ: "
         "{graph} Which nodes are predecessors of node {u}?",
         "Report every node with an edge pointing into node {u}. {format_note} Output a "
         "list.\nQ: {graph} What are the predecessors of node {u}?",
         "You are given a directed graph. {format_note} Collect all nodes u such that the arc "
         "u->{u} exists, and output them as a list.\nQ: {graph} List the predecessors of node "
         "{u}."},
        {"Scanning the incoming edges of node {u} gives the set above. The answer is:",
         "Exactly these nodes point into node {u}. The answer is:"},
    };

    b[TaskKind::common_neighbors] = {
        {"Find the common neighbors of two nodes in an {directed_word} graph. {format_note} "
         "Given a graph and a pair of nodes, output the set of nodes adjacent to both as a "
         "list.\nQ: {graph} Which nodes are common neighbors of node {u} and node {v}?",
         "Compute the intersection of the neighborhoods of node {u} and node {v}. "
         "{format_note} Output a list.\nQ: {graph} What are their common neighbors?",
         "You are given an {directed_word} graph. {format_note} List every node adjacent to "
         "both node {u} and node {v}.\nQ: {graph} Give the common neighbors."},
        {"The intersection of the two neighbor lists is the set above. The answer is:",
         "Exactly these nodes border both query nodes. The answer is:"},
    };

    b[TaskKind::degree_counting] = {
        {"Count the degree of a node in an {directed_word} graph. {format_note} Given a graph "
         "and a node, output the number of edges connected to that node.\nQ: {graph} What is "
         "the degree of node {u}?",
         "Report how many edges touch node {u}. {format_note} Output a single number.\nQ: "
         "{graph} What is the degree of node {u}?",
         "You are given an {directed_word} graph. {format_note} Count the neighbors of node "
         "{u} and output the count.\nQ: {graph} How many edges are connected to node {u}?"},
        {"Counting the neighbors of node {u} gives {value}. The answer is:",
         "Node {u} touches {value} edges. The answer is:"},
    };

    b[TaskKind::jaccard] = {
        {"Compute the Jaccard coefficient of two nodes, defined as the size of the "
         "intersection of their neighbor sets divided by the size of the union. {format_note} "
         "Output the coefficient rounded to 4 decimal places.\nQ: {graph} What is the Jaccard "
         "coefficient of node {u} and node {v}?",
         "Measure the neighborhood similarity of node {u} and node {v} as |intersection| / "
         "|union|. {format_note} Round the result to 4 decimal places.\nQ: {graph} Compute "
         "their Jaccard coefficient.",
         "You are given an {directed_word} graph. {format_note} Divide the number of common "
         "neighbors of node {u} and node {v} by the size of the union of their neighborhoods "
         "and output 4 decimal places.\nQ: {graph} What is the Jaccard coefficient?"},
        {"The ratio of intersection to union gives {value}. The answer is:",
         "Dividing the two sizes yields {value}. The answer is:"},
    };

    b[TaskKind::clustering_coefficient] = {
        {"Compute the clustering coefficient of a node: the number of edges among its "
         "neighbors divided by the number of neighbor pairs. {format_note} Output the "
         "coefficient rounded to 4 decimal places.\nQ: {graph} What is the clustering "
         "coefficient of node {u}?",
         "Measure how strongly the neighbors of node {u} connect to each other, as connected "
         "neighbor pairs over all neighbor pairs. {format_note} Round to 4 decimal places.\nQ: "
         "{graph} Compute the clustering coefficient of node {u}.",
         "You are given an undirected graph. {format_note} For node {u}, count the edges among "
         "its neighbors, divide by the possible pairs, and output 4 decimal places.\nQ: "
         "{graph} What is its clustering coefficient?"},
        {"The fraction of connected neighbor pairs is {value}. The answer is:",
         "Dividing connected pairs by possible pairs gives {value}. The answer is:"},
    };

    b[TaskKind::shortest_path] = {
        {"Find the shortest path between two nodes in an {directed_word} graph. {format_note} "
         "Given a graph and a pair of nodes, you need to output the weight of the shortest "
         "path between the two nodes.\nQ: {graph} Give the weight of the shortest path from "
         "node {u} to node {v}.",
         "Compute the minimum total weight of any path from node {u} to node {v}. "
         "{format_note} Output the weight.\nQ: {graph} What is the shortest-path weight?",
         "You are given a weighted graph. {format_note} Determine the lightest route from node "
         "{u} to node {v} and output its total weight.\nQ: {graph} Give the minimum weight."},
        {"The lightest route is {witness} with total weight {value}. The answer is:",
         "No cheaper path exists than {witness}, whose weight is {value}. The answer is:"},
    };

    b[TaskKind::diameter] = {
        {"Calculate the diameter of a connected graph: the longest shortest path between any "
         "two nodes. {format_note} Output the diameter value.\nQ: {graph} What is the diameter "
         "of this graph?",
         "Find the pair of nodes whose shortest-path distance is largest and output that "
         "distance. {format_note}\nQ: {graph} Compute the diameter.",
         "You are given a graph. {format_note} Compute every eccentricity and output the "
         "largest one (the diameter).\nQ: {graph} What is the diameter?"},
        {"The farthest pair is joined by {witness}, at distance {value}. The answer is:",
         "No pair of nodes is farther apart than {value} (witness path {witness}). The answer "
         "is:"},
    };

    b[TaskKind::minimum_spanning_tree] = {
        {"Output the total weight of the minimum spanning tree (MST) for an undirected "
         "weighted graph. {format_note}\nQ: {graph} What is the total weight of the MST?",
         "Build a spanning tree of minimum total weight and report that weight. "
         "{format_note}\nQ: {graph} Give the MST weight.",
         "You are given a connected weighted graph. {format_note} Select edges forming a "
         "minimum spanning tree and output the sum of their weights.\nQ: {graph} What does "
         "the MST weigh?"},
        {"The chosen edges {witness} span every node with total weight {value}. The answer "
         "is:",
         "No spanning tree is lighter than {value}. The answer is:"},
    };

    b[TaskKind::maximum_flow] = {
        {"Calculate the maximum flow between two nodes in a directed graph with edge "
         "capacities. {format_note} Given a graph, a source and a sink, output the value of "
         "the maximum flow.\nQ: {graph} What is the maximum flow from node {u} to node {v}?",
         "Determine how much flow can be routed from node {u} to node {v} without exceeding "
         "any capacity. {format_note} Output the flow value.\nQ: {graph} Compute the maximum "
         "flow.",
         "You are given a capacitated directed graph. {format_note} Push as much flow as "
         "possible from node {u} to node {v} and output the total.\nQ: {graph} Give the "
         "maximum flow value."},
        {"No augmenting path remains, so the maximum flow is {value}. The answer is:",
         "The augmentations add up to {value}, and no more flow fits. The answer is:"},
    };

    b[TaskKind::maximum_clique] = {
        {"Solve the Maximum Clique Problem: find the largest set of nodes such that every "
         "pair in the set is connected by an edge. {format_note} Output the members of the "
         "maximum clique as a list.\nQ: {graph} Identify the maximum clique.",
         "Find the largest fully connected subset of nodes in this graph. {format_note} "
         "Output the subset as a list.\nQ: {graph} Which nodes form the maximum clique?",
         "You are given an undirected graph. {format_note} Search for the biggest clique and "
         "output its node list.\nQ: {graph} Give the maximum clique."},
        {"The search proves no larger clique exists, so the maximum clique is {witness} with "
         "{value} members. The answer is:",
         "The largest fully connected set found is {witness} (size {value}). The answer is:"},
    };

    b[TaskKind::maximum_triangle_sum] = {
        {"Find the maximum triangle weight sum: choose three mutually adjacent nodes "
         "maximizing the sum of their node weights. {format_note} {node_weights} Output the "
         "best sum.\nQ: {graph} What is the maximum triangle weight sum?",
         "Among all triangles in the graph, output the largest total node weight. "
         "{format_note} {node_weights}\nQ: {graph} Compute the maximum triangle sum.",
         "You are given an undirected graph with node weights. {format_note} {node_weights} "
         "Pick the triangle with the heaviest three nodes and output the sum.\nQ: {graph} "
         "Give the maximum sum."},
        {"The heaviest triangle is {witness} with weight sum {value}. The answer is:",
         "No triangle beats {witness}, whose node weights add to {value}. The answer is:"},
    };

    b[TaskKind::strongly_connected_components] = {
        {"Find the strongly connected components of a directed graph. A strongly connected "
         "component is a maximal set of nodes where every pair is mutually reachable. "
         "{format_note} Output the components as a list of node lists, each sorted "
         "ascending, ordered by smallest member.\nQ: {graph} What are the strongly connected "
         "components?",
         "Partition the nodes of this directed graph into strongly connected components. "
         "{format_note} Output the partition as nested lists.\nQ: {graph} Give the "
         "components.",
         "You are given a directed graph. {format_note} Group nodes that can reach each other "
         "in both directions and output the groups.\nQ: {graph} List the strongly connected "
         "components."},
        {"Every node is assigned to exactly one component. The answer is:",
         "The partition above is maximal in both directions. The answer is:"},
    };

    b[TaskKind::pagerank] = {
        {"Which node has the largest PageRank value in the {directed_word} graph? The "
         "PageRank is computed with the update PR(v) = (1 - alpha) + alpha * sum(PR(u) / "
         "OutDegree(u)) over incoming neighbors u. The damping factor alpha is {alpha}. The "
         "number of iterations is {max_iter}. The initial PageRank values for all nodes are "
         "initialized equally as 1/N, where N is the number of nodes. {format_note}\nQ: "
         "{graph} Output the node with the largest PageRank value.",
         "Run {max_iter} PageRank iterations with damping factor {alpha}, starting every "
         "score at 1/N, and report the top-ranked node. {format_note}\nQ: {graph} Which node "
         "ends up with the largest score?",
         "You are given a graph. {format_note} Iterate PR(v) = (1 - {alpha}) + {alpha} * "
         "sum(PR(u)/OutDegree(u)) from a uniform start for {max_iter} rounds and output the "
         "argmax node.\nQ: {graph} Which node has the highest PageRank?"},
        {"After the iterations the largest score belongs to node {value}. The answer is:",
         "The scores converge with node {value} on top. The answer is:"},
    };

    b[TaskKind::maximum_matching] = {
        {"Find a maximum matching in the bipartite graph. {format_note} The graph is "
         "described as follows: {graph}. Nodes set 1 contains: {left_set}. Nodes set 2 "
         "contains: {right_set}. Output the matching as a list of pairs (left, right).",
         "Pair up as many nodes of set 1 with neighbors in set 2 as possible, using each "
         "node at most once. {format_note} Graph: {graph}. Set 1: {left_set}. Set 2: "
         "{right_set}. Output the pairs.",
         "You are given a bipartite graph. {format_note} Graph: {graph}. The left partition "
         "is {left_set} and the right partition is {right_set}. Output a maximum matching as "
         "a pair list."},
        {"No augmenting path remains, so the matching {witness} of size {value} is maximum. "
         "The answer is:",
         "The matching {witness} uses {value} pairs and cannot be enlarged. The answer is:"},
    };

    for (auto& [task, set] : b) {
      set.span = (task == TaskKind::maximum_clique || task == TaskKind::maximum_matching)
                     ? AnswerSpanKind::witness
                     : AnswerSpanKind::value;
    }
    return b;
  }();
  return kBank;
}

}  // namespace

const CotTemplateSet& cot_templates(TaskKind task) { return bank().at(task); }

}  // namespace graphforge
