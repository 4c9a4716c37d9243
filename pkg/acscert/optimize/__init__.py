from .simplex import SimplexQuadraticProgram, SimplexSolution, FaceEnumerationSolver, GridOracleResult, maximize_over_simplex, grid_oracle
