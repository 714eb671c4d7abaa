from collections import Counter

from django.core.exceptions import ValidationError as DjangoValidationError
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from apps.arithmetic.rationals import format_rational, parse_rational
from apps.arithmetic.singularities import QuotientSingularity
from apps.arithmetic.weights import WeightSystem, minus_k_cubed
from apps.families.domain import Basket, FanoFamily
from apps.fibrations.domain import BlowupChain, ChainEvent
from apps.fibrations.services.catalog import CURVE_CENTER_FAMILIES
from core.exceptions import Fano95Error


class RationalField(serializers.Field):
    '''Exact rational carried as a "num/den" string, never as a float.'''

    default_error_messages = {
        'invalid': _('Enter an exact rational as a "num/den" or "num" string.'),
    }

    def to_representation(self, value):
        return format_rational(value)

    def to_internal_value(self, data):
        if not isinstance(data, str):
            self.fail('invalid')
        try:
            return parse_rational(data)
        except DjangoValidationError:
            self.fail('invalid')


class BasketEntrySerializer(serializers.Serializer):
    r = serializers.IntegerField(min_value=2)
    a = serializers.IntegerField(min_value=1)
    count = serializers.IntegerField(min_value=1)

    def validate(self, attrs):
        try:
            attrs['singularity'] = QuotientSingularity(attrs['r'], attrs['a'])
        except Fano95Error as exc:
            raise serializers.ValidationError(str(exc))
        return attrs


class ChainEventSerializer(serializers.Serializer):
    '''One blow-up with the blow-ups of its children, nested to any depth.'''

    r = serializers.IntegerField(min_value=2)
    a = serializers.IntegerField(min_value=1)

    def get_fields(self):
        fields = super().get_fields()
        fields['children'] = ChainEventSerializer(many=True, required=False)
        return fields

    def validate(self, attrs):
        children = tuple(child['event'] for child in attrs.get('children', ()))
        try:
            attrs['event'] = ChainEvent(QuotientSingularity(attrs['r'], attrs['a']), children)
        except Fano95Error as exc:
            raise serializers.ValidationError(str(exc))
        return attrs


class ChainSerializer(serializers.Serializer):
    multiplicity = serializers.IntegerField(min_value=1)
    events = ChainEventSerializer(many=True, source='roots')


class FamilyRecordSerializer(serializers.Serializer):
    '''
    One row of the family database.

    Reading a record checks it against the engine's own arithmetic: the
    weights must form a valid system, the degree and -K^3 must follow from
    them, and every chain must fit the basket.
    '''

    n = serializers.IntegerField(min_value=1)
    weights = serializers.ListField(
        child=serializers.IntegerField(min_value=1), min_length=5, max_length=5,
    )
    degree = serializers.IntegerField(min_value=1)
    kcube = RationalField()
    basket = BasketEntrySerializer(many=True)
    chains = ChainSerializer(many=True)
    targets = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=1), min_length=3, max_length=3),
    )
    has_fibration = serializers.BooleanField()

    def validate_weights(self, value):
        if value[0] != 1:
            raise serializers.ValidationError(_('The first ambient weight must be 1.'))
        try:
            return WeightSystem(tuple(value[1:]))
        except Fano95Error as exc:
            raise serializers.ValidationError(str(exc))

    def validate(self, attrs):
        weights = attrs['weights']
        if attrs['degree'] != weights.d:
            raise serializers.ValidationError(
                {'degree': f"degree of {weights} is {weights.d}, got {attrs['degree']}"}
            )
        if attrs['kcube'] != minus_k_cubed(weights):
            raise serializers.ValidationError(
                {'kcube': f"-K^3 of {weights} is {minus_k_cubed(weights)}, got {attrs['kcube']}"}
            )

        counts = Counter()
        for entry in attrs['basket']:
            counts[entry['singularity']] += entry['count']
        family = FanoFamily(
            n=attrs['n'], weights=weights, kcube=attrs['kcube'], basket=Basket.from_counts(counts),
        )
        try:
            chains = tuple(
                BlowupChain.build(family, [event['event'] for event in chain['roots']], chain['multiplicity'])
                for chain in attrs['chains']
            )
        except Fano95Error as exc:
            raise serializers.ValidationError({'chains': str(exc)})
        for chain in chains:
            if chain.running_kcube != 0:
                raise serializers.ValidationError(
                    {'chains': f'chain {chain} leaves -K^3 = {chain.running_kcube}, not 0'}
                )

        expected = bool(chains) or family.n in CURVE_CENTER_FAMILIES
        if attrs['has_fibration'] != expected:
            raise serializers.ValidationError(
                {'has_fibration': f'No. {family.n} with {len(chains)} chain(s) must have has_fibration={expected}'}
            )

        attrs['family'] = family
        attrs['chain_objects'] = chains
        return attrs

    def create(self, validated_data):
        from .services import FamilyRecord

        return FamilyRecord(
            family=validated_data['family'],
            chains=validated_data['chain_objects'],
            targets=tuple(tuple(target) for target in validated_data['targets']),
            has_fibration=validated_data['has_fibration'],
        )
