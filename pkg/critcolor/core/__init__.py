# Core module - shared configuration, errors and search budgets
