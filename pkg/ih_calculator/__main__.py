from ih_calculator.cli.main import main

if __name__ == "__main__":
    main()
