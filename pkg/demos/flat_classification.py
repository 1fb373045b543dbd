"""
Which cubic girth-five graphs are Ricci-flat?
=============================================

Two routes to the same three graphs.
"""

from ricciflat.classification import classify, search_two_pentagon_completions, verify_lemma
from ricciflat.generation import GenerationConfig, generate
from ricciflat.named import dodecahedron

# Route one: enumerate, then test every graph.
graphs = [g for n in (10, 12, 14) for g in generate(GenerationConfig(n))]
result = classify(graphs + [dodecahedron()])
print(result.table())

# Flat edges always sit on two pentagons that share only that edge.
print("violations:", [bad for g in graphs for bad in verify_lemma(g)])

# Route two: grow outward from two pentagons glued along an edge.
for g in search_two_pentagon_completions(20):
    print(g.n, classify([g]).flat_names)
