# Generated by `rbkit seminormal --resolve-convention`; do not edit by hand.
# Signs (add_add, remove_remove, mixed) of the diamond function, selected as the
# unique candidate under which every defining relation holds at random generic x.
RESOLVED_CONVENTION = (1, -1, 1)
