from treelib import Tree

from .graph_field import GraphField


def show_fiber(G: GraphField, x: int) -> str:
    """Text rendering of the tree over x, rooted at its least-numbered vertex."""
    graph = G.fiber_graph(x)
    root = G.vertices.fiber(x)[0]
    tree = Tree()
    tree.create_node(tag=str(root), identifier=G.vertices.index(root))
    seen = {root}
    frontier = [root]
    while frontier:
        v = frontier.pop(0)
        for w in sorted(graph.neighbors(v), key=G.vertices.index):
            if w not in seen:
                seen.add(w)
                tree.create_node(tag=str(w), identifier=G.vertices.index(w), parent=G.vertices.index(v))
                frontier.append(w)
    return tree.show(stdout=False)


def show_tree(rooted_tree) -> str:
    """Text rendering of a rooted tree of relations: one node per vertex with its domain and class count."""
    tree = Tree()
    for vertex in rooted_tree.vertices_from_root():
        relation = rooted_tree.vertex_relations[vertex]
        tag = f'{vertex}: {len(relation.domain)} points, {relation.num_classes()} classes {relation}'
        tree.create_node(tag=tag, identifier=vertex, parent=rooted_tree.parent(vertex))
    return tree.show(stdout=False)
