from apps.blowups.services.kawamata import kawamata_blowup


def admissible_centers(family):
    '''Basket types whose blow-up leaves -K^3 >= 0, in basket order.'''
    return [
        entry.singularity for entry in family.basket
        if kawamata_blowup(entry.singularity).drop <= family.kcube
    ]


def zero_degree_centers(family):
    '''Basket types whose single blow-up already brings -K^3 to zero.'''
    return [
        singularity for singularity in admissible_centers(family)
        if kawamata_blowup(singularity).drop == family.kcube
    ]
