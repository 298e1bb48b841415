"""
Constructive covers, gaps and Kleene-Brouwer trees over countable orders.
"""
