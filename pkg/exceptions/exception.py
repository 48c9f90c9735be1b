class GraphFormatError(Exception):
    pass

class MalformedHeader(GraphFormatError):
    pass

class MalformedEdgeLine(GraphFormatError):
    pass

class VertexOutOfRange(GraphFormatError):
    pass

class SelfLoop(GraphFormatError):
    pass

class DuplicateEdge(GraphFormatError):
    pass

class InvalidCharacter(GraphFormatError):
    pass

class TruncatedPayload(GraphFormatError):
    pass

class OracleLimitExceeded(Exception):
    pass

class NoSmallTransversal(Exception):
    pass

class OverlappingSets(Exception):
    pass

class RecipeError(Exception):
    pass

class InvalidRecipeStep(RecipeError):
    pass

class BudgetTooSmall(RecipeError):
    pass

class ClassificationError(Exception):
    pass

class StructureViolation(ClassificationError):
    pass

class OutOfScopeClassification(ClassificationError):
    pass

class WrongFamily(ClassificationError):
    pass

class TheoremViolation(Exception):
    pass

class ValidationError(Exception):
    pass
