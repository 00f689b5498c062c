"""Exact computations in negative cluster categories of Dynkin quivers."""
